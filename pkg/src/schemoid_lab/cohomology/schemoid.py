"""
Module for the cohomology of a colored category with coefficients in a module
over its quotient.
"""

import logging
from typing import Optional, Union

from schemoid_lab.builders.natlen import NatLenSymbol
from schemoid_lab.cohomology.complexes import CohomologyGroups, cochain_cohomology, reduce_coefficients
from schemoid_lab.cohomology.resolutions import (
    CategoryModule,
    MonoidModule,
    bar_cochain_complex,
    koszul_ext,
    nerve_cochain_complex,
)
from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.config import CompletionCaps, default_max_degree
from schemoid_lab.exceptions import PreconditionError, UndecidedError, UnsupportedError
from schemoid_lab.quotient.quotient import QuotientResult, quotient_category

logger = logging.getLogger(__name__)


def schemoid_cohomology(X: Union[ColoredCategory, NatLenSymbol],
                        module: Optional[MonoidModule] = None,
                        max_degree: Optional[int] = None,
                        modulus: Optional[int] = None,
                        caps: Optional[CompletionCaps] = None,
                        quotient: Optional[QuotientResult] = None,
                        augmentation: int = 1,
                        sigma_action=None) -> CohomologyGroups:
    """
    ``H^k`` of a colored category for ``k ≤ max_degree``.

    One-object finite quotients use the bar complex of the quotient monoid,
    multi-object finite quotients use the nerve with constant coefficients and
    the free category on one endomorphism uses its Koszul resolution.

    Args:
        X: Colored category, or the (N, len) symbol
        module: Coefficients over the quotient monoid; constant ``Z`` when omitted
        max_degree: Degree bound (``SCHEMOID_LAB_MAX_DEGREE`` by default)
        modulus: Report cohomology with ``Z/modulus`` coefficients
        caps: Completion caps for the quotient
        quotient: Precomputed quotient of ``X``
        augmentation: Augmentation of the Koszul resolution (``0`` or ``1``)
        sigma_action: Matrix of the generator on the coefficients of the (N, len) symbol;
            ``[[1]]`` (constant ``Z``) when omitted

    Raises:
        UndecidedError: if the quotient is not decided within caps
        UnsupportedError: for non-constant coefficients on a multi-object quotient

    Returns:
        CohomologyGroups in degrees ``0..max_degree``
    """
    top = default_max_degree() if max_degree is None else max_degree
    needed = top + 1 if modulus else top

    if isinstance(X, NatLenSymbol):
        action = [[1]] if sigma_action is None else sigma_action
        groups = koszul_ext(augmentation, action).groups(needed)
    else:
        Q = quotient or quotient_category(X, caps)
        if not Q.finite:
            raise UndecidedError("Cohomology needs a finite quotient", partial=Q.system)
        category = Q.require_finite()
        if category.object_count == 1:
            G = Q.monoid()
            M = module or MonoidModule.trivial(G)
            if M.monoid.element_count != G.element_count:
                raise PreconditionError("Module is not over the quotient monoid", witness=M.monoid.element_count)
            complex_ = bar_cochain_complex(G, MonoidModule(G, M.rank, M.action), needed)
        elif module is None:
            complex_ = nerve_cochain_complex(category, CategoryModule.constant(category), needed)
        else:
            raise UnsupportedError("Only constant coefficients are supported on multi-object quotients")
        groups = cochain_cohomology(complex_, needed)

    if modulus:
        groups = reduce_coefficients(groups, modulus, top)
    logger.info(f"Cohomology through degree {top}: {groups}")
    return groups

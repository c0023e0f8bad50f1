"""
Module for generating fixture JSON from the builders.
"""

import logging
from typing import Any, Dict, List, Sequence

from schemoid_lab.builders.examples import prop_app_example, pullback_counterexample
from schemoid_lab.builders.natlen import nat_len_truncation
from schemoid_lab.builders.schemoids import discrete_schemoid, group_schemoid, hamming_schemoid, johnson_schemoid
from schemoid_lab.builders.simplicial import SimplicialComplex, simplicial_schemoid
from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import StructuralError

logger = logging.getLogger(__name__)

GENERATORS = ("discrete", "group", "simplicial", "pullback-example", "prop-app-example",
              "hamming", "johnson", "natlen")


def _ints(args: Sequence[str], count: int, kind: str) -> List[int]:
    if len(args) != count:
        raise StructuralError(f"'{kind}' takes {count} integer argument(s)", pointer="gen")
    try:
        return [int(a) for a in args]
    except ValueError as e:
        raise StructuralError(f"'{kind}' arguments must be integers", pointer="gen") from e


def parse_facets(args: Sequence[str]) -> List[List[int]]:
    """Facets written as comma separated vertices, e.g. ``1,2 2,3``."""
    try:
        return [[int(v) for v in arg.split(",") if v] for arg in args]
    except ValueError as e:
        raise StructuralError(f"Bad facet list {list(args)}", pointer="facets") from e


def generate(kind: str, args: Sequence[str], category_payload: Any = None) -> Dict[str, Any]:
    """
    Build a ``colored.json`` payload.

    Args:
        kind: One of ``GENERATORS``
        args: Generator arguments
        category_payload: Parsed ``category.json`` for ``discrete``

    Raises:
        StructuralError: for unknown generators or bad arguments
    """
    if kind == "discrete":
        if category_payload is None:
            raise StructuralError("'discrete' needs a category.json input", pointer="input")
        return discrete_schemoid(FiniteCategory.from_json(category_payload)).to_json()
    if kind == "group":
        if len(args) != 1:
            raise StructuralError("'group' takes a group name or a JSON multiplication table", pointer="gen")
        return group_schemoid(FiniteMonoid.parse(args[0])).to_json()
    if kind == "simplicial":
        K = SimplicialComplex.from_facets(parse_facets(args))
        payload = simplicial_schemoid(K).to_json()
        payload["complex"] = K.to_json()
        return payload
    if kind == "pullback-example":
        bundle = pullback_counterexample()
        payload = bundle.colored.to_json()
        payload["extras"] = {k: v for k, v in bundle.to_json().items() if k != "colored"}
        return payload
    if kind == "prop-app-example":
        bundle = prop_app_example()
        payload = bundle.colored.to_json()
        payload["extras"] = {k: v for k, v in bundle.to_json().items() if k != "colored"}
        return payload
    if kind == "hamming":
        n, q = _ints(args, 2, kind)
        return hamming_schemoid(n, q).to_json()
    if kind == "johnson":
        v, d = _ints(args, 2, kind)
        return johnson_schemoid(v, d).to_json()
    if kind == "natlen":
        (L,) = _ints(args, 1, kind)
        return nat_len_truncation(L).to_json()
    raise StructuralError(f"Unknown generator '{kind}'", pointer="gen")

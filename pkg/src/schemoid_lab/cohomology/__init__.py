"""Cochain complexes, Smith normal form and schemoid cohomology."""
from .complexes import AbelianGroup, CochainComplex, CohomologyGroups, cochain_cohomology
from .schemoid import schemoid_cohomology
from .smith import smith_normal_form

__all__ = ['AbelianGroup', 'CochainComplex', 'CohomologyGroups', 'cochain_cohomology',
           'schemoid_cohomology', 'smith_normal_form']

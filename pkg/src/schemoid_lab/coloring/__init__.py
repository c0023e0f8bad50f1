"""Colorings and their combinatorial predicates."""
from .colored import ColoredCategory, Verdict
from .predicates import structure_constants, tameness

__all__ = ['ColoredCategory', 'Verdict', 'structure_constants', 'tameness']

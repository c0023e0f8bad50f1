"""Finite categories, monoids and Set-valued functors."""
from .category import CategoryFunctor, FiniteCategory
from .functors import NaturalTransformation, SetFunctor
from .monoid import FiniteMonoid

__all__ = ['CategoryFunctor', 'FiniteCategory', 'NaturalTransformation', 'SetFunctor', 'FiniteMonoid']

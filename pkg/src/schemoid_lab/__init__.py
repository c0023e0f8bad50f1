"""Colored categories, schemoids, their quotient categories and cohomology."""
from .coloring.colored import ColoredCategory
from .core.category import FiniteCategory
from .core.monoid import FiniteMonoid
from .exceptions import PreconditionError, SchemoidLabError, StructuralError, UndecidedError, UnsupportedError

__version__ = "0.1.0"

__all__ = ['ColoredCategory', 'FiniteCategory', 'FiniteMonoid', 'PreconditionError', 'SchemoidLabError',
           'StructuralError', 'UndecidedError', 'UnsupportedError']

"""Quotient categories by Knuth-Bendix completion."""
from .quotient import QuotientResult, quotient_category

__all__ = ['QuotientResult', 'quotient_category']

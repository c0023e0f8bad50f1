"""
Shared fixtures for schemoid-lab tests.
"""

import pytest

from schemoid_lab.builders.schemoids import group_schemoid, hamming_schemoid
from schemoid_lab.config import CompletionCaps
from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.core.monoid import FiniteMonoid


@pytest.fixture
def caps():
    """Completion caps large enough for every test fixture."""
    return CompletionCaps(max_rule_length=12, max_pairs=20000, max_elements=5000)


@pytest.fixture
def arrow_category():
    """The category 0 → 1."""
    return FiniteCategory.from_preorder(2, [(0, 1)])


@pytest.fixture
def z2():
    """The cyclic group of order two."""
    return FiniteMonoid.cyclic(2)


@pytest.fixture
def s3():
    """The symmetric group on three letters."""
    return FiniteMonoid.symmetric(3)


@pytest.fixture
def hamming22():
    """Schemoid of the Hamming scheme H(2,2)."""
    return hamming_schemoid(2, 2)


@pytest.fixture
def z3_schemoid():
    """Group schemoid of Z/3."""
    return group_schemoid(FiniteMonoid.cyclic(3))

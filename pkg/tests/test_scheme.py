"""
Test module for association schemes, thin residues and the factor group comparison.
"""

import pytest

from schemoid_lab.coloring.predicates import check_colored_morphism
from schemoid_lab.core.category import check_category_functor
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError, StructuralError
from schemoid_lab.scheme.association import (
    AssociationScheme,
    builtin_schemes,
    closure_colors,
    group_scheme,
    hamming,
    johnson,
    scheme_from_spec,
    standard_representation_check,
    validate_scheme,
)
from schemoid_lab.scheme.embedding import as_schemoid, hamming_map_morphism, hamming_schemoid, prop_h_crosscheck
from schemoid_lab.scheme.residue import ClosedSubset, factor_scheme, thin_residue


@pytest.fixture
def h22():
    """The Hamming scheme H(2,2)."""
    return hamming(2, 2)


def test_hamming_scheme(h22):
    """Test the axioms and invariants of H(2,2)."""
    assert validate_scheme(h22).ok
    assert h22.point_count == 4
    assert h22.valencies() == [1, 2, 1]
    assert h22.is_symmetric()
    assert h22.is_commutative()
    assert not h22.is_thin()
    assert h22.p(1, 1, 0) == 2
    assert h22.p(1, 1, 2) == 2
    assert h22.complex_product(1, 1) == {0, 2}
    assert h22.point_labels == ("00", "01", "10", "11")


def test_johnson_scheme():
    """Test J(4,2) and the parameter range of Johnson schemes."""
    J = johnson(4, 2)
    assert validate_scheme(J).ok
    assert J.valencies() == [1, 4, 1]
    assert J.point_labels[0] == "{1,2}"
    with pytest.raises(StructuralError):
        johnson(4, 3)


def test_group_scheme_is_thin_and_not_symmetric():
    """Test the thin scheme of S3."""
    A = group_scheme(FiniteMonoid.named("S3"), "S3")
    assert validate_scheme(A).ok
    assert A.is_thin()
    assert not A.is_commutative()
    assert not A.is_symmetric()
    with pytest.raises(PreconditionError):
        group_scheme(FiniteMonoid(((0, 1), (1, 1)), 0))


def test_validate_rejects_non_scheme():
    """Test that a non-constant intersection number is reported."""
    A = AssociationScheme([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    report = validate_scheme(A)
    assert not report.ok
    assert any("not constant" in v for v in report.violations)


@pytest.mark.parametrize("max_size,count", [(16, 25), (36, 33)])
def test_builtin_scheme_counts(max_size, count):
    """Test the named schemes up to a point bound."""
    schemes = builtin_schemes(max_size)
    assert len(schemes) == count
    assert "H(2,2)" in schemes
    assert all(A.point_count <= max_size for A in schemes.values())


def test_standard_representation(h22):
    """Test the adjacency algebra expansion."""
    assert standard_representation_check(h22).ok
    assert standard_representation_check(johnson(5, 2)).ok


def test_thin_residue_and_factor(h22):
    """Test the thin residue of H(2,2) and its factor group of order two."""
    T = thin_residue(h22)
    assert T.colors == (0, 2)
    assert 2 in T
    factor = factor_scheme(h22)
    assert factor.blocks == [[0, 3], [1, 2]]
    assert factor.class_of_color == (0, 1, 0)
    assert factor.is_thin
    assert factor.group(h22).element_count == 2
    assert factor.to_json()["thin"]


def test_factor_needs_closed_subset(h22):
    """Test that a non-closed subset is rejected."""
    with pytest.raises(PreconditionError):
        factor_scheme(h22, ClosedSubset((0, 1)))
    assert closure_colors(h22, [1]) == frozenset({0, 1, 2})


def test_factor_of_complete_graph_is_trivial():
    """Test that the thin residue of H(1,3) is everything."""
    A = hamming(1, 3)
    assert thin_residue(A).colors == (0, 1)
    assert factor_scheme(A).group(A).element_count == 1


@pytest.mark.parametrize("A", [hamming(2, 2), hamming(1, 3), group_scheme(FiniteMonoid.named("Z3"), "Z3"),
                               group_scheme(FiniteMonoid.named("S3"), "S3")])
def test_quotient_group_matches_factor_group(A, caps):
    """Test the quotient group against the factor group by the thin residue."""
    report = prop_h_crosscheck(A, caps)
    assert report.ok
    assert report.quotient_order == report.factor_order
    assert report.to_json()["ok"]


def test_scheme_from_spec():
    """Test CLI-style scheme words."""
    assert scheme_from_spec(["hamming", "2", "2"]).name == "H(2,2)"
    assert scheme_from_spec(["group", "S3"]).point_count == 6
    with pytest.raises(StructuralError):
        scheme_from_spec(["cube", "3"])
    with pytest.raises(StructuralError):
        scheme_from_spec(["hamming", "x", "2"])
    with pytest.raises(StructuralError):
        scheme_from_spec([])


def test_scheme_json(h22):
    """Test the scheme.json schema and its adjoint check."""
    payload = h22.to_json()
    restored = AssociationScheme.from_json(payload)
    assert (restored.relations == h22.relations).all()
    payload["adjoint"] = [0, 2, 1]
    with pytest.raises(StructuralError):
        AssociationScheme.from_json(payload)


def test_as_schemoid_indexing(h22):
    """Test that the pair (x, y) sits at index x*n + y."""
    X = as_schemoid(h22)
    assert X.base.morphisms[1 * 4 + 2] == (1, 2)
    assert X.color_of[1 * 4 + 2] == 2
    assert X.color_count == 3


def test_hamming_map_morphism():
    """Test the point map from H(1,3) into the even-weight words of H(3,2)."""
    u = hamming_map_morphism(1, 3, 3, ["011", "101", "110"])
    assert u.object_map == (3, 5, 6)
    X, Y = hamming_schemoid(1, 3), hamming_schemoid(3, 2)
    assert check_category_functor(X.base, Y.base, u).ok
    assert check_colored_morphism(u, X, Y).color_map == (0, 2)
    with pytest.raises(StructuralError):
        hamming_map_morphism(1, 3, 3, ["01", "101", "110"])


def test_scheme_from_json_rejects_non_integer_entries(h22):
    """Test that relation entries must be JSON integers."""
    payload = h22.to_json()
    payload["relations"][1][2] = 1.5
    with pytest.raises(StructuralError) as excinfo:
        AssociationScheme.from_json(payload)
    assert excinfo.value.pointer == "relations/1/2"
    payload["relations"][1][2] = True
    with pytest.raises(StructuralError):
        AssociationScheme.from_json(payload)


def test_scheme_from_spec_accepts_group_table():
    """Test a group given as a JSON multiplication table."""
    A = scheme_from_spec(["group", "[[0, 1, 2], [1, 2, 0], [2, 0, 1]]"])
    assert A.point_count == 3
    assert A.is_thin()
    with pytest.raises(PreconditionError):
        scheme_from_spec(["group", "[[0, 1], [1, 1]]"])


def closed_subsets(A):
    others = range(1, A.color_count)
    for mask in range(1 << len(others)):
        colors = [0] + [c for k, c in enumerate(others) if mask >> k & 1]
        if A.is_closed(colors):
            yield frozenset(colors)


@pytest.mark.parametrize("name", [name for name, A in builtin_schemes(16).items() if A.color_count <= 6])
def test_thin_residue_is_least_thin_factor(name):
    """Test that every closed subset with a thin factor contains the thin residue."""
    A = builtin_schemes(16)[name]
    residue = set(thin_residue(A).colors)
    subsets = list(closed_subsets(A))
    assert frozenset(residue) in subsets
    assert factor_scheme(A).is_thin
    for T in subsets:
        if factor_scheme(A, ClosedSubset(tuple(sorted(T)))).is_thin:
            assert residue <= T, sorted(T)


@pytest.mark.parametrize("name", [name for name, A in builtin_schemes(16).items() if A.is_symmetric()])
def test_factor_group_of_symmetric_scheme_is_elementary(name):
    """Test that every element of the factor group of a symmetric scheme squares to one."""
    A = builtin_schemes(16)[name]
    G = factor_scheme(A).group(A)
    assert G.is_group
    assert all(G.multiply(g, g) == G.identity for g in range(G.element_count))


def test_group_scheme_of_z2_is_hamming_1_2():
    """Test that the scheme of Z/2 is H(1,2) up to renaming colors."""
    A, B = group_scheme(FiniteMonoid.cyclic(2)), hamming(1, 2)
    assert A.point_count == B.point_count
    renaming = {}
    for a, b in zip(A.relations.flatten().tolist(), B.relations.flatten().tolist()):
        assert renaming.setdefault(a, b) == b
    assert sorted(renaming.values()) == list(range(B.color_count))

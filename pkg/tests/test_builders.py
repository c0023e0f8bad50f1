"""
Test module for simplicial complexes, length truncations and standard schemoids.
"""

import pytest

from schemoid_lab.builders.natlen import collapse_to_length, nat_len_symbol, nat_len_truncation
from schemoid_lab.builders.schemoids import discrete_schemoid, group_schemoid
from schemoid_lab.builders.simplicial import (
    SimplicialComplex,
    complexes_on,
    face_weights,
    simplicial_schemoid,
    trace_monoid_presentation,
    vertex_colors,
)
from schemoid_lab.coloring.predicates import check_colored_morphism
from schemoid_lab.core.category import check_category_functor, validate_category
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError, StructuralError


@pytest.fixture
def edge():
    """The 1-simplex on vertices 1 and 2."""
    return SimplicialComplex.simplex(2)


def test_from_facets_closes_downward(edge):
    """Test the generated face list."""
    assert edge.vertices == (1, 2)
    assert [sorted(face) for face in edge.faces] == [[], [1], [2], [1, 2]]
    assert edge.edges() == [(1, 2)]
    assert edge.to_json() == {"vertices": [1, 2], "faces": [[], [1], [2], [1, 2]]}


def test_complex_must_be_downward_closed():
    """Test that a missing subface is rejected."""
    with pytest.raises(StructuralError):
        SimplicialComplex((1, 2), (frozenset(), frozenset({1, 2})))
    with pytest.raises(StructuralError):
        SimplicialComplex((1,), (frozenset(), frozenset({1}), frozenset({2})))


def test_boundary_and_skeleton():
    """Test the hollow triangle."""
    hollow = SimplicialComplex.boundary(3)
    assert len(hollow.faces) == 7
    assert SimplicialComplex.simplex(3).one_skeleton() == hollow


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 9)])
def test_complexes_on(n, count):
    """Test the number of complexes on a labelled vertex set."""
    complexes = complexes_on(n)
    assert len(complexes) == count
    assert len({K.faces for K in complexes}) == count


def test_simplicial_schemoid(edge):
    """Test the face poset colored by face differences."""
    X = simplicial_schemoid(edge)
    assert X.base.object_count == 4
    assert X.base.morphism_count == 9
    assert validate_category(X.base).ok
    assert X.color_of[X.base.morphisms.index((0, 3))] == 3
    assert X.color_of[X.base.morphisms.index((1, 3))] == 2
    assert vertex_colors(edge) == [1, 2]
    assert face_weights(edge) == [0, 1, 1, 2]


def test_trace_monoid_presentation(edge):
    """Test the commutation relation of an edge."""
    presentation = trace_monoid_presentation(edge)
    assert presentation.relations == (((0, 1), (1, 0)),)


def test_nat_len_truncation():
    """Test the length coloring of 0 < 1 < 2."""
    T = nat_len_truncation(2)
    assert T.base.object_count == 3
    assert T.color_of == (0, 1, 2, 0, 1, 0)
    assert validate_category(T.base).ok
    with pytest.raises(StructuralError):
        nat_len_truncation(-1)
    assert nat_len_symbol().to_json() == {"symbol": "natlen"}


def test_collapse_to_length(edge):
    """Test that face size gives a colored morphism onto the truncation."""
    u, source, target = collapse_to_length(edge)
    assert u.object_map == (0, 1, 1, 2)
    assert check_category_functor(source.base, target.base, u).ok
    assert check_colored_morphism(u, source, target).color_map == (0, 1, 1, 2)


def test_group_schemoid_coloring():
    """Test that x → y is colored by y x⁻¹."""
    X = group_schemoid(FiniteMonoid.cyclic(3))
    assert X.color_of[0 * 3 + 1] == 1
    assert X.color_of[1 * 3 + 2] == 1
    assert X.color_of[2 * 3 + 0] == 1
    assert all(X.color_of[x * 3 + x] == 0 for x in range(3))
    with pytest.raises(PreconditionError):
        group_schemoid(FiniteMonoid(((0, 1), (1, 1)), 0))


def test_discrete_schemoid(arrow_category):
    """Test one color per morphism."""
    X = discrete_schemoid(arrow_category)
    assert X.color_count == arrow_category.morphism_count
    assert X.color_of == (0, 1, 2)

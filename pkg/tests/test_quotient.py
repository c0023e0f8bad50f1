"""
Test module for presentations, completion and quotient categories.
"""

import pytest

from schemoid_lab.builders.examples import prop_app_example, pullback_counterexample
from schemoid_lab.builders.schemoids import discrete_schemoid, group_schemoid, hamming_schemoid
from schemoid_lab.builders.simplicial import SimplicialComplex, trace_monoid_presentation
from schemoid_lab.coloring.colored import identity_colors
from schemoid_lab.coloring.predicates import structure_constants
from schemoid_lab.config import CompletionCaps
from schemoid_lab.core.category import check_category_functor, validate_category
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import StructuralError, UndecidedError
from schemoid_lab.quotient.presentation import (
    build_presentation,
    monoid_presentation_from_constants,
    one_object_presentation,
)
from schemoid_lab.quotient.quotient import (
    compare_bracket_quotient,
    congruence_closure,
    element_orders,
    growth_series,
    pi_functor,
    quotient_category,
    quotient_of_presentation,
)
from schemoid_lab.quotient.rewriting import complete, reduce_word, shortlex_ordered


@pytest.fixture
def cyclic_presentation():
    """The presentation ⟨a | aaa = 1⟩."""
    return one_object_presentation(1, [((0, 0, 0), ())], ["a"])


def test_shortlex_orientation():
    """Test that longer words are rewritten to shorter ones."""
    assert shortlex_ordered((0,), (0, 0)) == ((0, 0), (0,))
    assert shortlex_ordered((0, 1), (1, 0)) == ((1, 0), (0, 1))
    assert reduce_word((1, 0, 1, 0), [((1, 0), (0, 1))]) == (0, 0, 1, 1)


def test_completion_of_cyclic_group(cyclic_presentation, caps):
    """Test completion and normal forms of ⟨a | aaa = 1⟩."""
    system = complete(cyclic_presentation, caps)
    assert system.complete
    assert system.rules == [((0, 0, 0), ())]
    result = quotient_of_presentation(cyclic_presentation, caps)
    assert result.finite
    assert result.kind == "group"
    assert [word for _, word in result.elements] == [(), (0,), (0, 0)]
    assert result.monoid().find_isomorphism(FiniteMonoid.cyclic(3)) is not None


def test_completion_stops_at_pair_cap(cyclic_presentation):
    """Test that exhausting the critical pair budget gives an incomplete system."""
    system = complete(cyclic_presentation, CompletionCaps(max_pairs=1))
    assert not system.complete


def test_infinite_monoid_is_undecided():
    """Test that the free commutative monoid on two letters stays undecided."""
    presentation = one_object_presentation(2, [((1, 0), (0, 1))])
    result = quotient_of_presentation(presentation, CompletionCaps(max_elements=50))
    assert result.status == "undecided"
    assert result.system.complete
    with pytest.raises(UndecidedError):
        result.require_finite()


def test_relation_with_unknown_generator():
    """Test that presentations reject out-of-range generators."""
    with pytest.raises(StructuralError):
        one_object_presentation(1, [((0, 1), ())])


def test_presentation_of_group_schemoid(z3_schemoid):
    """Test the generated presentation of a group schemoid."""
    presentation = build_presentation(z3_schemoid)
    assert presentation.object_count == 1
    assert len(presentation.generators) == 3
    assert presentation.identity_generators == (0,)
    assert ((0,), ()) in presentation.relations
    assert all(presentation.is_typed(r) for r in presentation.relations)


@pytest.mark.parametrize("name,order", [("Z2", 2), ("Z3", 3), ("Z4", 4), ("Z2xZ2", 4), ("S3", 6)])
def test_group_schemoid_quotient_is_the_group(name, order, caps):
    """Test that the quotient of a group schemoid recovers the group."""
    G = FiniteMonoid.named(name)
    Q = quotient_category(group_schemoid(G), caps)
    assert Q.finite
    assert Q.kind == "group"
    assert Q.order == order
    assert Q.monoid().find_isomorphism(G) is not None


def test_hamming_quotient(hamming22, caps):
    """Test that H(2,2) collapses to a group of order two."""
    Q = quotient_category(hamming22, caps)
    assert Q.kind == "group"
    assert Q.order == 2
    assert element_orders(Q.monoid()) == {0: 1, 1: 2}
    payload = Q.to_json()
    assert payload["order"] == 2
    assert len(payload["multiplication_table"]) == 2


def test_discrete_quotient_is_the_category(arrow_category, caps):
    """Test that a discrete schemoid is its own quotient."""
    X = discrete_schemoid(arrow_category)
    Q = quotient_category(X, caps)
    assert Q.kind == "category"
    assert Q.category.object_count == 2
    assert Q.order == 3
    assert compare_bracket_quotient(X, Q)


def test_bracket_agrees_with_quotient_for_tame_schemoid(z3_schemoid, caps):
    """Test the bracket-quotient isomorphism of a tame schemoid."""
    verdict = compare_bracket_quotient(z3_schemoid, quotient_category(z3_schemoid, caps))
    assert verdict.holds


def test_pi_is_a_functor(hamming22, caps):
    """Test that the projection onto the quotient is a functor."""
    Q = quotient_category(hamming22, caps)
    pi = pi_functor(hamming22, Q)
    assert check_category_functor(hamming22.base, Q.category, pi).ok


def test_pullback_example_quotient_is_trivial(caps):
    """Test that the non-natural example collapses to the trivial group."""
    Q = quotient_category(pullback_counterexample().colored, caps)
    assert Q.finite
    assert Q.order == 1
    assert Q.object_classes == (0, 0)


def test_prop_app_quotient(caps):
    """Test the two-object quotient of the example category."""
    Q = quotient_category(prop_app_example().colored, caps)
    assert Q.kind == "category"
    assert Q.category.object_count == 2
    assert Q.order == 5
    assert validate_category(Q.category).ok


def test_trace_monoid_growth():
    """Test growth of trace monoids with and without commutation."""
    edge = SimplicialComplex.from_facets([[1, 2]])
    assert growth_series(trace_monoid_presentation(edge), [0, 1], 2) == [1, 2, 3]
    free = SimplicialComplex.from_facets([[1], [2]])
    assert growth_series(trace_monoid_presentation(free), [0, 1], 3) == [1, 2, 4, 8]


def test_congruence_closure_merges_commuting_words():
    """Test the bounded word problem."""
    presentation = one_object_presentation(2, [((1, 0), (0, 1))])
    classes = congruence_closure(presentation, 2)
    assert classes[(0, (0, 1))] == classes[(0, (1, 0))]
    assert classes[(0, (0, 0))] != classes[(0, (1, 1))]


@pytest.mark.parametrize("name", ["hamming22", "z3_schemoid"])
def test_presentation_from_structure_constants(name, caps, request):
    """Test that the schemoid monoid presentation gives the same quotient."""
    X = request.getfixturevalue(name)
    direct = quotient_of_presentation(
        monoid_presentation_from_constants(structure_constants(X), identity_colors(X)), caps)
    Q = quotient_category(X, caps)
    assert direct.order == Q.order
    assert direct.monoid().find_isomorphism(Q.monoid()) is not None


@pytest.mark.parametrize("build", [
    lambda: hamming_schemoid(2, 2),
    lambda: hamming_schemoid(1, 3),
    lambda: group_schemoid(FiniteMonoid.cyclic(3)),
    lambda: pullback_counterexample().colored,
    lambda: prop_app_example().colored,
], ids=["H(2,2)", "H(1,3)", "S(Z3)", "pullback", "prop_app"])
def test_equal_normal_forms_are_congruent(build, caps):
    """Test that words sharing a normal form fall in one bounded congruence class."""
    presentation = build_presentation(build())
    system = complete(presentation, caps)
    assert system.complete
    classes = congruence_closure(presentation, 6)
    representatives = {}
    for (x, word), rep in classes.items():
        representatives.setdefault((x, reduce_word(word, system.rules)), set()).add(rep)
    assert all(len(reps) == 1 for reps in representatives.values())

"""
Test module for pullbacks, Kan extensions and sheafification through the quotient.
"""

import pytest

from schemoid_lab.builders.examples import pullback_counterexample
from schemoid_lab.builders.schemoids import group_schemoid
from schemoid_lab.cli.golden import adjunction_agrees
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.core.functors import SetFunctor, check_functor, check_natural
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError
from schemoid_lab.quotient.quotient import quotient_category
from schemoid_lab.topos.limits import (
    coproduct,
    enumerate_functors,
    hom_count,
    kan_pushforward,
    objectwise_pullback,
    parse_family,
)
from schemoid_lab.topos.sheaves import (
    classify_transformation,
    is_color_preserving,
    sheafify,
    sheafify_counit,
    sheafify_unit,
    transport_theta,
)

SWAP = {"a": "b", "b": "a"}
KEEP = {"a": "a", "b": "b"}


@pytest.fixture
def z2_schemoid():
    """The group schemoid of Z/2."""
    return group_schemoid(FiniteMonoid.cyclic(2))


@pytest.fixture
def swap_functor():
    """Color-preserving functor on the Z/2 schemoid swapping two points along every non-identity."""
    return SetFunctor((("a", "b"), ("a", "b")), (dict(KEEP), dict(SWAP), dict(SWAP), dict(KEEP)))


def test_pullback_counterexample():
    """Test that the pullback of color-preserving functors loses the property."""
    ex = pullback_counterexample()
    assert is_color_preserving(ex.colored, ex.F)
    P, p1, p2 = objectwise_pullback(ex.colored.base, ex.F, ex.F, ex.eta, ex.lam)
    assert sorted(P.object_sets[ex.x]) == ["(3,3)"]
    assert sorted(P.object_sets[ex.y]) == ["(1,1)", "(2,2)", "(3,3)"]
    assert check_functor(ex.colored.base, P).ok
    assert check_natural(ex.colored.base, P, ex.F, p1).ok
    verdict = is_color_preserving(ex.colored, P)
    assert not verdict
    assert verdict.witness == (0, 2)
    with pytest.raises(PreconditionError):
        transport_theta(ex.colored, P)


def test_coproduct(arrow_category):
    """Test the objectwise disjoint union."""
    F = SetFunctor.constant(arrow_category, ["a"])
    G = SetFunctor.constant(arrow_category, ["b"])
    S, i1, i2 = coproduct(arrow_category, F, G)
    assert S.object_sets[0] == ("inl(a)", "inr(b)")
    assert check_functor(arrow_category, S).ok
    assert check_natural(arrow_category, F, S, i1).ok
    assert check_natural(arrow_category, G, S, i2).ok


def test_kan_pushforward_with_empty_comma(arrow_category):
    """Test that an object outside the image reached by nothing gets the one-point limit."""
    T = FiniteCategory.terminal()
    G = SetFunctor((("a", "b"),), ({"a": "a", "b": "b"},))
    pi = CategoryFunctor((0,), (0,))
    pushed = kan_pushforward(T, arrow_category, pi, G)
    assert pushed.object_sets == (("[a]", "[b]"), ("[]",))
    assert pushed.apply(1, "[a]") == "[]"
    assert check_functor(arrow_category, pushed).ok


def test_kan_pushforward_needs_functor(arrow_category):
    """Test the functor precondition."""
    broken = SetFunctor((("a",), ("b",)), ({"a": "a"}, {"a": "c"}, {"b": "b"}))
    collapse = CategoryFunctor((0, 0), (0, 0, 0))
    with pytest.raises(PreconditionError):
        kan_pushforward(arrow_category, FiniteCategory.terminal(), collapse, broken)


def test_parse_family():
    """Test splitting of nested family labels."""
    assert parse_family("[a,(1,2),[b,c]]") == ["a", "(1,2)", "[b,c]"]
    assert parse_family("[]") == []


def test_transport_theta(z2_schemoid, swap_functor, caps):
    """Test the functor induced on the quotient group."""
    theta = transport_theta(z2_schemoid, swap_functor, caps=caps)
    assert theta.object_sets == (("a", "b"),)
    assert theta.morphism_maps[1] == SWAP


def test_sheafify_unit_and_counit(z2_schemoid, swap_functor, caps):
    """Test naturality of the unit and counit and the triangle identity."""
    Q = quotient_category(z2_schemoid, caps)
    C = z2_schemoid.base
    sheaf = sheafify(z2_schemoid, swap_functor, Q)
    assert [len(s) for s in sheaf.object_sets] == [4, 4]
    assert check_functor(C, sheaf).ok
    unit = sheafify_unit(z2_schemoid, swap_functor, Q)
    counit = sheafify_counit(z2_schemoid, swap_functor, Q)
    assert check_natural(C, swap_functor, sheaf, unit).ok
    assert check_natural(C, sheaf, swap_functor, counit).ok
    for x in range(C.object_count):
        for a in swap_functor.object_sets[x]:
            assert counit.components[x][unit.components[x][a]] == a


def test_classify_transformation():
    """Test the flags of the example transformation."""
    ex = pullback_counterexample()
    flags = classify_transformation(ex.colored, ex.F, ex.F, ex.eta)
    assert flags.locally_constant
    assert not flags.sharp
    assert flags.witness == ("sharp", 0, 1)


def test_enumerate_functors_and_hom_count(arrow_category):
    """Test brute-force enumeration on 0 → 1 with sets of size at most one."""
    functors = list(enumerate_functors(arrow_category, 1))
    # sizes (0,0), (0,1), (1,1); (1,0) has no map into the empty set
    assert len(functors) == 3
    point = SetFunctor.constant(arrow_category, ["p"])
    assert hom_count(arrow_category, point, point) == 1


@pytest.mark.parametrize("build", [lambda: group_schemoid(FiniteMonoid.cyclic(2)),
                                   lambda: pullback_counterexample().colored])
def test_sheafification_adjunction(build, caps):
    """Test Hom(F, G) against sharp maps into the sheafification."""
    assert adjunction_agrees(build(), caps)

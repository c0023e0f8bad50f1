"""
Test module for finite categories, monoids and Set-valued functors.
"""

import random

import pytest

from schemoid_lab.core.category import (
    CategoryFunctor,
    FiniteCategory,
    check_category_functor,
    compose_functors,
    find_isomorphism,
    validate_category,
)
from schemoid_lab.core.functors import (
    NaturalTransformation,
    SetFunctor,
    check_functor,
    check_natural,
    restrict_functor,
)
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import StructuralError


def test_preorder_category_shape(arrow_category):
    """Test the thin category 0 → 1."""
    C = arrow_category
    assert C.object_count == 2
    assert C.morphisms == ((0, 0), (0, 1), (1, 1))
    assert C.identity_of == (0, 2)
    assert C.compose(2, 1) == 1
    assert C.compose(1, 0) == 1
    assert validate_category(C).ok


def test_compose_rejects_non_composable(arrow_category):
    """Test that composing mismatched arrows raises."""
    with pytest.raises(StructuralError):
        arrow_category.compose(0, 2)


def test_validate_detects_missing_composite(arrow_category):
    """Test that a hole in the composition table is reported."""
    table = dict(arrow_category.compose_table)
    del table[(2, 1)]
    broken = FiniteCategory(2, arrow_category.morphisms, arrow_category.identity_of, table)
    report = validate_category(broken)
    assert not report.ok
    assert any("undefined" in v for v in report.violations)


def test_validate_detects_non_associative_monoid_table():
    """Test that a non-associative table fails validation."""
    # (2·1)·1 = 0 while 2·(1·1) = 2
    table = ((0, 1, 2), (1, 0, 2), (2, 1, 2))
    C = FiniteCategory.from_monoid(table, 0)
    assert not validate_category(C).ok


def test_json_round_trip_preserves_category(arrow_category):
    """Test the category.json schema."""
    restored = FiniteCategory.from_json(arrow_category.to_json())
    assert restored.morphisms == arrow_category.morphisms
    assert dict(restored.compose_table) == dict(arrow_category.compose_table)


def test_from_json_points_at_bad_endpoint():
    """Test that malformed fixtures carry a pointer."""
    payload = {"objects": 1, "morphisms": [{"src": 0, "tgt": 3}], "identity": [0], "compose": [[0, 0, 0]]}
    with pytest.raises(StructuralError) as excinfo:
        FiniteCategory.from_json(payload)
    assert excinfo.value.pointer == "morphisms[0]"


def test_groupoid_pairs_are_invertible():
    """Test the codiscrete groupoid."""
    C = FiniteCategory.from_groupoid_pairs(3)
    assert C.morphism_count == 9
    assert C.morphisms[1 * 3 + 2] == (1, 2)
    assert all(C.is_invertible(f) for f in range(C.morphism_count))
    assert C.inverse(1 * 3 + 2) == 2 * 3 + 1


def test_functor_checks_and_composition(arrow_category):
    """Test the collapse of 0 → 1 onto the terminal category."""
    T = FiniteCategory.terminal()
    u = CategoryFunctor((0, 0), (0, 0, 0))
    assert check_category_functor(arrow_category, T, u).ok
    ident = CategoryFunctor.identity(T)
    assert compose_functors(ident, u) == u


def test_find_isomorphism_between_monoid_categories():
    """Test that ℤ/4 and the Klein group are told apart."""
    z4 = FiniteMonoid.cyclic(4).as_category()
    assert find_isomorphism(z4, z4) is not None
    assert find_isomorphism(z4, FiniteMonoid.klein().as_category()) is None


def test_monoid_basics(s3):
    """Test named groups and their invariants."""
    assert s3.element_count == 6
    assert s3.is_group
    assert not s3.is_commutative
    assert s3.validate().ok
    assert sorted(s3.order(a) for a in range(6)) == [1, 2, 2, 2, 3, 3]
    assert FiniteMonoid.named("Z/4").element_count == 4
    assert FiniteMonoid.named("Z2xZ2").is_commutative


def test_monoid_isomorphism_search(z2):
    """Test isomorphism search and relabelling."""
    klein = FiniteMonoid.klein()
    shuffled = klein.relabel([0, 3, 1, 2])
    assert shuffled.validate().ok
    assert klein.find_isomorphism(shuffled) is not None
    assert FiniteMonoid.cyclic(4).find_isomorphism(klein) is None
    assert z2.opposite().table == z2.table


def test_unknown_group_name():
    """Test that unknown names raise."""
    with pytest.raises(StructuralError):
        FiniteMonoid.named("q8")


def test_constant_functor_is_functor(arrow_category):
    """Test constant Set-valued functors and identity transformations."""
    F = SetFunctor.constant(arrow_category, ["a", "b"])
    assert check_functor(arrow_category, F).ok
    assert check_natural(arrow_category, F, F, NaturalTransformation.identity(F)).ok


def test_functor_violation_reported(arrow_category):
    """Test that a map leaving the target set is reported."""
    F = SetFunctor((("a",), ("b",)), ({"a": "a"}, {"a": "c"}, {"b": "b"}))
    report = check_functor(arrow_category, F)
    assert not report.ok


def test_functor_json_accepts_image_lists(arrow_category):
    """Test the list form of morphism maps in functor.json."""
    payload = {"object_sets": [["a", "b"], ["c"]], "morphism_maps": [["a", "b"], ["c", "c"], ["c"]]}
    F = SetFunctor.from_json(payload, arrow_category)
    assert F.apply(1, "b") == "c"
    assert check_functor(arrow_category, F).ok


def test_restrict_functor_along_collapse(arrow_category):
    """Test that pulling back along the collapse gives a constant functor."""
    T = FiniteCategory.terminal()
    G = SetFunctor((("p", "q"),), ({"p": "p", "q": "q"},))
    u = CategoryFunctor((0, 0), (0, 0, 0))
    F = restrict_functor(arrow_category, u, G)
    assert F.object_sets == (("p", "q"), ("p", "q"))
    assert check_functor(arrow_category, F).ok


def test_direct_product_of_cyclic_groups():
    """Test that Z/2 x Z/2 is the Klein group."""
    product = FiniteMonoid.direct_product(FiniteMonoid.cyclic(2), FiniteMonoid.cyclic(2))
    assert product.validate().ok
    assert product.find_isomorphism(FiniteMonoid.klein()) is not None
    assert product.label(3) == "(1,1)"


def transformation_monoid(rng, points, generator_count):
    identity = tuple(range(points))
    elements = [identity]
    frontier = [tuple(rng.randrange(points) for _ in range(points)) for _ in range(generator_count)]
    generators = list(frontier)
    while frontier:
        f = frontier.pop()
        if f in elements:
            continue
        elements.append(f)
        frontier.extend(tuple(f[g[i]] for i in range(points)) for g in generators)
    index = {f: k for k, f in enumerate(elements)}
    return [[index[tuple(a[b[i]] for i in range(points))] for b in elements] for a in elements]


@pytest.mark.parametrize("seed", range(6))
def test_random_monoid_categories_are_valid(seed):
    """Test one-object categories of random transformation monoids."""
    rng = random.Random(seed)
    table = transformation_monoid(rng, 3, rng.randint(1, 2))
    C = FiniteCategory.from_monoid(table, 0)
    assert validate_category(C).ok
    assert FiniteMonoid(tuple(tuple(row) for row in table), 0).validate().ok


@pytest.mark.parametrize("seed", range(6))
def test_random_preorder_categories_are_valid(seed):
    """Test thin categories of random relations on at most four objects."""
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    relation = [(x, y) for x in range(n) for y in range(n) if rng.random() < 0.3]
    C = FiniteCategory.from_preorder(n, relation)
    assert validate_category(C).ok
    assert all(len(C.hom(x, y)) <= 1 for x in range(n) for y in range(n))

"""
Test module for colorings, structure constants and tameness.
"""

import random

import pytest

from schemoid_lab.builders.examples import prop_app_example, pullback_counterexample
from schemoid_lab.builders.schemoids import discrete_schemoid
from schemoid_lab.coloring.colored import ColoredCategory, class_index, identity_colors, object_classes
from schemoid_lab.coloring.predicates import (
    ColorQuiver,
    binary_distance_colors,
    bracket_category,
    check_colored_morphism,
    color_quiver,
    complex_product,
    compose_color_maps,
    identity_classes_agree,
    is_naturally_colored,
    prop_app_hypotheses,
    structure_constants,
    tameness,
    verify_color_quiver,
)
from schemoid_lab.core.category import FiniteCategory, validate_category
from schemoid_lab.exceptions import PreconditionError, StructuralError


@pytest.fixture
def monochrome_arrow(arrow_category):
    """The category 0 → 1 with a single color."""
    return ColoredCategory.from_colors(arrow_category, [0, 0, 0])


def test_colors_must_be_onto(arrow_category):
    """Test that an empty color is rejected."""
    with pytest.raises(StructuralError):
        ColoredCategory.from_colors(arrow_category, [0, 2, 0])


def test_colored_json_round_trip(hamming22):
    """Test the colored.json schema."""
    restored = ColoredCategory.from_json(hamming22.to_json())
    assert restored.color_of == hamming22.color_of
    assert restored.color_names == hamming22.color_names
    assert validate_category(restored.base).ok


def test_hamming_structure_constants(hamming22):
    """Test structure constants of H(2,2) against the intersection numbers."""
    table = structure_constants(hamming22)
    assert table.schemoid
    assert table.value(1, 1, 0) == 2
    assert table.value(1, 1, 2) == 2
    assert table.value(1, 2, 1) == 1
    assert table.value(2, 2, 1) == 0
    assert complex_product(table, 1, 1) == {0, 2}
    frame = table.to_frame()
    assert list(frame.columns) == ["sigma", "tau", "mu", "p"]
    assert len(frame) == len(table.p)


def test_monochrome_arrow_is_not_schemoid(monochrome_arrow):
    """Test the witness of a failing schemoid check."""
    table = structure_constants(monochrome_arrow)
    assert not table.schemoid
    assert table.witness == (0, 0, 0, 0, 1)
    flags = tameness(monochrome_arrow, table)
    assert flags.tiii is None
    assert not flags.tame


def test_hamming_is_not_tame(hamming22):
    """Test that a non-thin scheme fails the unique composite condition."""
    flags = tameness(hamming22)
    assert flags.unital
    assert flags.tii
    assert flags.tiii is False
    assert flags.witness["condition"] == "unique composite"


def test_group_schemoid_is_tame(z3_schemoid):
    """Test that group schemoids are tame with a one-object bracket category."""
    assert tameness(z3_schemoid).tame
    bracket = bracket_category(z3_schemoid)
    assert bracket.object_count == 1
    assert bracket.morphism_count == 3
    assert validate_category(bracket).ok


def test_discrete_schemoid_bracket_is_base(arrow_category):
    """Test that the bracket category of a discrete schemoid is the base category."""
    X = discrete_schemoid(arrow_category)
    assert tameness(X).tame
    bracket = bracket_category(X)
    assert bracket.morphisms == arrow_category.morphisms


def test_bracket_needs_tame(hamming22):
    """Test the precondition of the bracket category."""
    with pytest.raises(PreconditionError):
        bracket_category(hamming22)


def test_natural_coloring_and_object_classes(z3_schemoid):
    """Test naturality, object classes and the identity-color classes."""
    assert is_naturally_colored(z3_schemoid)
    assert object_classes(z3_schemoid) == [[0, 1, 2]]
    assert class_index(z3_schemoid) == (0, 0, 0)
    assert identity_colors(z3_schemoid) == [0]
    assert identity_classes_agree(z3_schemoid)


def test_pullback_example_is_not_natural():
    """Test the witness of a coloring that is not natural."""
    X = pullback_counterexample().colored
    verdict = is_naturally_colored(X)
    assert not verdict
    assert verdict.witness == (0, 2)
    assert object_classes(X) == [[0, 1]]
    with pytest.raises(PreconditionError):
        color_quiver(X)


def test_color_quiver(z3_schemoid):
    """Test the color quiver of a group schemoid."""
    quiver = color_quiver(z3_schemoid)
    assert quiver.I0 == (0,)
    assert quiver.sbar == (0, 0, 0)
    assert quiver.tbar == (0, 0, 0)
    assert verify_color_quiver(z3_schemoid, quiver)


def test_colored_morphism_into_hamming():
    """Test the induced color map of the example functor into H(2,2)."""
    example = prop_app_example()
    check = check_colored_morphism(example.u, example.colored, example.target)
    assert check.ok
    assert check.color_map == (0, 0, 0, 1, 1, 2)
    assert prop_app_hypotheses(example.u, example.colored, example.target, example.tau)
    # color of b maps to distance 1 but b has no inverse
    assert not prop_app_hypotheses(example.u, example.colored, example.target, 4)
    # color of c maps to distance 2
    assert not prop_app_hypotheses(example.u, example.colored, example.target, 5)


def test_compose_color_maps():
    """Test composition of color maps."""
    assert compose_color_maps((5, 6, 7), (2, 0, 1)) == (7, 5, 6)


def test_prop_app_reads_distances_from_target():
    """Test that the parity check follows Hamming distance rather than color index."""
    example = prop_app_example()
    target = example.target
    assert binary_distance_colors(target) == (0, 1, 2)
    swapped = ColoredCategory(target.base, tuple((0, 2, 1)[c] for c in target.color_of), 3)
    assert binary_distance_colors(swapped) == (0, 2, 1)
    assert prop_app_hypotheses(example.u, example.colored, swapped, example.tau)
    assert not prop_app_hypotheses(example.u, example.colored, swapped, 5)
    assert prop_app_hypotheses(example.u, example.colored, target, example.tau, distance=(0, 1, 2))


def test_prop_app_rejects_non_hamming_target():
    """Test that a target whose colors mix distances is refused."""
    example = prop_app_example()
    target = example.target
    merged = ColoredCategory(target.base, tuple(min(c, 1) for c in target.color_of), 2)
    assert binary_distance_colors(merged) is None
    with pytest.raises(PreconditionError):
        prop_app_hypotheses(example.u, example.colored, merged, example.tau)


def random_coloring(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    if rng.random() < 0.5:
        base = FiniteCategory.from_groupoid_pairs(n)
    else:
        base = FiniteCategory.from_preorder(n, [(x, y) for x in range(n) for y in range(n) if rng.random() < 0.5])
    raw = [rng.randrange(3) for _ in range(base.morphism_count)]
    order = {c: k for k, c in enumerate(dict.fromkeys(raw))}
    return ColoredCategory.from_colors(base, [order[c] for c in raw])


@pytest.mark.parametrize("seed", range(12))
def test_color_quiver_exists_iff_naturally_colored(seed):
    """Test that a compatible color quiver exists exactly for naturally colored categories."""
    X = random_coloring(seed)
    C = X.base
    members = [X.members(c) for c in range(X.color_count)]
    candidate = ColorQuiver(
        tuple(identity_colors(X)),
        tuple(range(X.color_count)),
        tuple(X.identity_color(C.src(group[0])) for group in members),
        tuple(X.identity_color(C.tgt(group[0])) for group in members),
    )
    if is_naturally_colored(X):
        quiver = color_quiver(X)
        assert quiver == candidate
        assert verify_color_quiver(X, quiver)
    else:
        # any compatible quiver must agree with the first member of each color
        assert not verify_color_quiver(X, candidate)
        with pytest.raises(PreconditionError):
            color_quiver(X)

"""
Test module for the golden acceptance rows.
"""

import pytest

from schemoid_lab.builders.simplicial import SimplicialComplex
from schemoid_lab.cli.golden import ROWS, load_expected, run_golden, simplicial_growth, trace_growth


@pytest.fixture(scope="module")
def expected():
    """Committed expectations."""
    return load_expected()


def test_every_row_has_an_expectation(expected):
    """Test that expected.json covers exactly the registered rows."""
    assert sorted(expected) == sorted(row.key for row in ROWS)


@pytest.mark.parametrize("key", [row.key for row in ROWS])
def test_golden_row(key, expected, caps):
    """Test one acceptance row against its expectation."""
    frame = run_golden(expected, caps, [key])
    assert len(frame) == 1
    record = frame.iloc[0]
    assert record["status"] == "pass", f"observed {record['observed']}"


def test_trace_growth_of_hollow_triangle():
    """Test that the face poset and the trace monoid grow alike on the hollow triangle."""
    hollow = SimplicialComplex.boundary(3)
    assert simplicial_growth(hollow, 3) == trace_growth(hollow, 3)
    assert trace_growth(hollow, 2) == [1, 3, 6]

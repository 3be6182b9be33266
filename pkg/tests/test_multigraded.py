import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest

from catalog import multigraded_exhaustive_search, multigraded_obstruction, sibling_pruned_subsets
from catalog.multigraded import CONCLUSION_CONFIRMS, CONCLUSION_INCOMPLETE
from core.exceptions import RangeError


def test_obstruction_thresholds():
    for n in range(4, 31):
        assert multigraded_obstruction(n, n - 1)
        assert multigraded_obstruction(n, n - 2)
        if n >= 5:
            assert not multigraded_obstruction(n, 2)
        if n >= 8:
            assert not multigraded_obstruction(n, n - 3)


def test_obstruction_range():
    with pytest.raises(RangeError):
        multigraded_obstruction(5, 1)
    with pytest.raises(RangeError):
        multigraded_obstruction(5, 5)


def test_sibling_pruning():
    # colex K_2 basis for n=4: e12 e13 e23 e14 e24 e34
    assert list(sibling_pruned_subsets(4, 2, 2)) == [(0, 5), (1, 4), (2, 3)]
    assert list(sibling_pruned_subsets(5, 2, 3)) == []


@pytest.mark.parametrize("n", [5, 6])
def test_no_multigraded_sequence_for_z2(n):
    report = multigraded_exhaustive_search(n, 2)
    assert report.leaves_examined == 0
    assert report.passing_count == 0
    assert report.complete
    assert report.conclusion == CONCLUSION_CONFIRMS


def test_multigraded_sequences_exist_for_n_minus_two():
    small = multigraded_exhaustive_search(4, 2)
    assert small.leaves_examined == 3
    assert small.passing_count == 3

    report = multigraded_exhaustive_search(5, 3)
    assert report.complete
    assert report.passing_count > 0
    assert all(report.verified)
    assert report.conclusion == CONCLUSION_CONFIRMS
    payload = report.to_dict()
    assert payload["proven_range"] is True
    assert payload["passing"][0][0].startswith("e")


def test_budget_marks_search_incomplete():
    report = multigraded_exhaustive_search(5, 3, budget=1)
    assert not report.complete
    assert report.leaves_examined == 1
    assert report.conclusion == CONCLUSION_INCOMPLETE
    assert report.to_dict()["unexplored"] is True


def test_no_multigraded_sequence_for_z3_in_six_variables():
    report = multigraded_exhaustive_search(6, 3)
    assert report.complete
    assert report.passing_count == 0
    assert report.passing == []
    assert report.conclusion == CONCLUSION_CONFIRMS

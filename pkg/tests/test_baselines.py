"""Unit, differential, and metamorphic oracles against correct and buggy sorts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intramorph.baselines import (UnitCase, differential_oracle,
                                  metamorphic_removal_oracle, unit_oracle)
from intramorph.cases import sorting
from intramorph.core import RelationStatus
from intramorph.seeds import SeededSource

arrays = st.lists(st.integers(min_value=0, max_value=9), max_size=8)

HANDWRITTEN_CASE = UnitCase(values=(3, 1, 2), expected=(1, 2, 3))


class FixedPicker:
    """Stands in for a seeded source; always picks the given index."""

    def __init__(self, index):
        self.index = index

    def below(self, bound):
        assert self.index < bound
        return self.index


# --- unit oracle -----------------------------------------------------------

def test_unit_oracle_holds_for_correct_sort():
    outcome = unit_oracle(sorting.bubble_sort, HANDWRITTEN_CASE)
    assert outcome.status is RelationStatus.HOLDS


def test_unit_oracle_catches_swap_index_bug():
    outcome = unit_oracle(sorting.bubble_sort_swap_index, HANDWRITTEN_CASE)
    assert outcome.status is RelationStatus.VIOLATED
    assert outcome.variant_output == [1, 2, 1]
    assert outcome.original_output == [1, 2, 3]


def test_unit_oracle_empty_case():
    outcome = unit_oracle(sorting.bubble_sort, UnitCase((), ()))
    assert outcome.status is RelationStatus.HOLDS


def test_unit_oracle_reports_crash():
    def broken(arr):
        raise IndexError("off the end")

    outcome = unit_oracle(broken, HANDWRITTEN_CASE)
    assert outcome.status is RelationStatus.EXECUTION_ERROR
    assert "IndexError" in outcome.error_detail


def test_unit_case_rejects_wrong_expected():
    with pytest.raises(ValueError):
        UnitCase(values=(3, 1, 2), expected=(3, 2, 1))


# --- differential oracle -----------------------------------------------------

ALL_SORTS = [sorting.bubble_sort, sorting.merge_sort, sorting.insertion_sort]


def test_differential_holds_for_agreeing_algorithms():
    outcome = differential_oracle(ALL_SORTS, [3, 1, 2])
    assert outcome.status is RelationStatus.HOLDS
    assert outcome.original_output == [1, 2, 3]


@given(arrays)
def test_differential_holds_on_all_inputs_for_correct_sorts(values):
    assert differential_oracle(ALL_SORTS, values).status is RelationStatus.HOLDS


def test_differential_single_algorithm_is_vacuous():
    outcome = differential_oracle([sorting.bubble_sort_swap_index], [3, 1, 2])
    assert outcome.status is RelationStatus.HOLDS


def test_differential_catches_disagreement():
    outcome = differential_oracle([sorting.bubble_sort_swap_index, sorting.merge_sort],
                                  [3, 1, 2])
    assert outcome.status is RelationStatus.VIOLATED
    assert outcome.original_output == [1, 2, 1]
    assert outcome.variant_output == [[1, 2, 1], [1, 2, 3]]


def test_differential_requires_algorithms():
    with pytest.raises(ValueError):
        differential_oracle([], [1])


def test_differential_does_not_mutate_input():
    values = [3, 1, 2]
    differential_oracle(ALL_SORTS, values)
    assert values == [3, 1, 2]


# --- metamorphic removal oracle ------------------------------------------------

def test_removal_holds_for_correct_sort():
    # sorted [3,1,2] is [1,2,3]; removing 2 leaves [1,3] on both sides
    outcome = metamorphic_removal_oracle(sorting.bubble_sort, [3, 1, 2], FixedPicker(1))
    assert outcome.status is RelationStatus.HOLDS
    assert outcome.original_output == [1, 3]


def test_removal_catches_swap_index_bug():
    # buggy sort yields [1,2,1]; removing 2 predicts [1,1], actual sort gives [1,3]
    outcome = metamorphic_removal_oracle(sorting.bubble_sort_swap_index, [3, 1, 2],
                                         FixedPicker(1))
    assert outcome.status is RelationStatus.VIOLATED
    assert outcome.original_output == [1, 1]
    assert outcome.variant_output == [1, 3]


def test_removal_singleton_reduces_to_empty():
    outcome = metamorphic_removal_oracle(sorting.bubble_sort, [5], FixedPicker(0))
    assert outcome.status is RelationStatus.HOLDS
    assert outcome.original_output == []
    assert outcome.variant_output == []


def test_removal_rejects_empty_input():
    with pytest.raises(ValueError):
        metamorphic_removal_oracle(sorting.bubble_sort, [], FixedPicker(0))


@given(arrays.filter(lambda v: len(v) >= 1),
       st.integers(min_value=0, max_value=2**64 - 1))
def test_removal_holds_for_correct_sort_with_seeded_picker(values, seed):
    # duplicates included: first-occurrence removal keeps both sides aligned
    outcome = metamorphic_removal_oracle(sorting.bubble_sort, values, SeededSource(seed))
    assert outcome.status is RelationStatus.HOLDS


@given(arrays.filter(lambda v: len(v) >= 1),
       st.integers(min_value=0, max_value=2**64 - 1))
def test_removal_removes_exactly_one_element_per_side(values, seed):
    outcome = metamorphic_removal_oracle(sorting.bubble_sort, values, SeededSource(seed))
    assert len(outcome.original_output) == len(values) - 1
    assert len(outcome.variant_output) == len(values) - 1


def test_removal_picker_is_replayable():
    first = metamorphic_removal_oracle(sorting.bubble_sort, [4, 4, 1, 9],
                                       SeededSource(77))
    second = metamorphic_removal_oracle(sorting.bubble_sort, [4, 4, 1, 9],
                                        SeededSource(77))
    assert first == second

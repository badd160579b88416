"""Black-box comparison oracles: unit, differential, and metamorphic removal.

These are the standard alternatives the harness runs side by side with the
program-pair oracles, packaged to return the same outcome type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import RelationOutcome, RelationStatus
from .seeds import SeededSource

SortFunction = Callable[[list], list]


@dataclass(frozen=True)
class UnitCase:
    """Hand-written input/expected pair for one sort invocation."""

    values: tuple[int, ...]
    expected: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.values) != list(self.expected):
            raise ValueError(
                f"expected {list(self.expected)} is not the sorted form of {list(self.values)}")


def unit_oracle(sort_fn: SortFunction, case: UnitCase) -> RelationOutcome:
    """Holds iff sorting a copy of the input yields the expected array."""
    expected = list(case.expected)
    try:
        actual = sort_fn(list(case.values))
    except Exception as exc:
        return RelationOutcome.execution_error(f"{type(exc).__name__}: {exc}")
    return RelationOutcome.from_check(actual == expected, expected, actual)


def differential_oracle(algorithms: Sequence[SortFunction], values: Sequence[int]
                        ) -> RelationOutcome:
    """Holds iff every algorithm's output equals the first algorithm's output."""
    if not algorithms:
        raise ValueError("differential oracle needs at least one algorithm")
    outputs = []
    for algorithm in algorithms:
        try:
            outputs.append(algorithm(list(values)))
        except Exception as exc:
            return RelationOutcome.execution_error(f"{type(exc).__name__}: {exc}")
    all_same = all(output == outputs[0] for output in outputs)
    status = RelationStatus.HOLDS if all_same else RelationStatus.VIOLATED
    return RelationOutcome(status, outputs[0], outputs)


def metamorphic_removal_oracle(sort_fn: SortFunction, values: Sequence[int],
                               picker: SeededSource) -> RelationOutcome:
    """Removing one element must keep the relative order of the rest.

    Sorts the input, picks an element from the sorted output via the seeded
    picker, deletes its first occurrence from both the input and the sorted
    output, and checks that sorting the reduced input matches the reduced
    sorted output. First-occurrence removal keeps both sides aligned when
    the array contains duplicates.
    """
    if len(values) < 1:
        raise ValueError("removal relation needs a non-empty array")
    try:
        sorted_full = sort_fn(list(values))
        chosen = sorted_full[picker.below(len(sorted_full))]
        reduced_input = list(values)
        reduced_input.remove(chosen)
        expected = list(sorted_full)
        expected.remove(chosen)
        actual = sort_fn(reduced_input)
    except Exception as exc:
        return RelationOutcome.execution_error(f"{type(exc).__name__}: {exc}")
    return RelationOutcome.from_check(actual == expected, expected, actual)

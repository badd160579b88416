"""Campaign and mutant records: everything the harness needs to run one oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from .core import (InputCase, RelationOutcome, TransformationDescriptor,
                   UnknownMutantError)
from .seeds import SeededSource

Evaluator = Callable[[InputCase], RelationOutcome]
# build_evaluator(mutant_name, statistical_repetitions, budget_seconds)
EvaluatorFactory = Callable[[Optional[str], Optional[int], Optional[float]], Evaluator]


@dataclass(frozen=True)
class Mutant:
    """One injectable seeded bug, with its expected detectability.

    ``expected_detected`` records whether the owning campaign's oracle should
    flag it; ``in_matrix`` is False for bugs the oracle provably cannot see
    per input (they stay runnable but contribute no detection-matrix cell).
    """

    name: str
    summary: str
    expected_detected: bool = True
    in_matrix: bool = True
    note: str = ""

    def expectation_label(self) -> str:
        if not self.in_matrix:
            return "outside-matrix"
        return "expected-detected" if self.expected_detected else "blind-spot"


@dataclass(frozen=True)
class Campaign:
    """A registered (generator, oracle, mutant catalog) triple.

    ``oracle_style`` is one of unit / differential / metamorphic /
    intramorphic; intramorphic campaigns must carry a transformation
    descriptor and are stochastic exactly when that descriptor admits
    false alarms.
    """

    name: str
    case_study: str
    oracle_style: str
    generate: Callable[[SeededSource], Any]
    build_evaluator: EvaluatorFactory
    render_payload: Callable[[Any], str]
    shrink_payload: Callable[[Any], list]
    render_output: Callable[[Any], str] = str
    descriptor: Optional[TransformationDescriptor] = None
    mutants: tuple[Mutant, ...] = ()
    stochastic: bool = False
    default_repetitions: Optional[int] = None

    def __post_init__(self) -> None:
        names = [mutant.name for mutant in self.mutants]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate mutant names in campaign {self.name}: {names}")
        if self.oracle_style == "intramorphic" and self.descriptor is None:
            raise ValueError(f"campaign {self.name} is intramorphic but has no descriptor")
        if self.descriptor is not None:
            if self.stochastic != self.descriptor.false_alarm_possible:
                raise ValueError(
                    f"campaign {self.name}: stochastic flag must match the descriptor's "
                    f"false-alarm classification")
        if self.stochastic and self.default_repetitions is None:
            raise ValueError(f"stochastic campaign {self.name} needs default repetitions")

    def mutant(self, name: str) -> Mutant:
        for mutant in self.mutants:
            if mutant.name == name:
                return mutant
        raise UnknownMutantError(
            f"campaign {self.name!r} has no mutant {name!r}; "
            f"known: {[m.name for m in self.mutants]}")

    def matrix_mutants(self) -> tuple[Mutant, ...]:
        return tuple(mutant for mutant in self.mutants if mutant.in_matrix)

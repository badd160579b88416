"""Monte Carlo case study: pi estimation with a sample-count parameter.

The estimator was parameterized over its sample count; the oracle compares
the same estimator instantiated at a small and a large budget and expects
the large budget to land at least as close to pi, judged on median-of-k
trials because a single unlucky trial can flip the comparison.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..core import (ApplicationMode, Automation, ConfigurationError, Granularity,
                    InputCase, IntramorphicRelation, ProgramPair, Provenance,
                    RelationOutcome, StatisticalConfig, TransformationDescriptor,
                    UnknownMutantError, evaluate_pair)
from ..seeds import SeededSource

# An existing function gained a sample-count parameter; single trials can
# produce false alarms, hence the statistical aggregation requirement.
MONTECARLO_DESCRIPTOR = TransformationDescriptor(
    granularity=Granularity.PARAMETER_ADDED,
    application_mode=ApplicationMode.IN_PLACE_MODIFIED,
    automation=Automation.MANUAL,
    relation_complete=True,
    false_alarm_possible=True,
)


@dataclass(frozen=True)
class SampleBudgetPair:
    n_small: int = 10
    n_large: int = 100_000
    repetitions: int = 5

    def __post_init__(self) -> None:
        if self.n_small < 1:
            raise ConfigurationError(f"n_small must be >= 1, got {self.n_small}")
        if self.n_small >= self.n_large:
            raise ConfigurationError(
                f"n_small must be smaller than n_large, got {self.n_small} >= {self.n_large}")
        if self.repetitions < 1 or self.repetitions % 2 == 0:
            raise ConfigurationError(
                f"repetitions must be a positive odd integer, got {self.repetitions}")


def _draw_points(n: int, source: SeededSource) -> tuple[np.ndarray, np.ndarray]:
    block = source.unit_block(2 * n)
    return block[0::2], block[1::2]


def pi_approximation(n: int, source: SeededSource) -> float:
    """Estimate pi as 4 * (fraction of uniform points inside the unit circle)."""
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    x, y = _draw_points(n, source)
    hits = int(np.count_nonzero(x * x + y * y <= 1.0))
    return 4 * hits / n


def pi_wrong_scale(n: int, source: SeededSource) -> float:
    """Seeded bug: scale factor 2 instead of 4; converges to pi/2."""
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    x, y = _draw_points(n, source)
    hits = int(np.count_nonzero(x * x + y * y <= 1.0))
    return 2 * hits / n


def pi_boundary_strict(n: int, source: SeededSource) -> float:
    """Seeded bug: strict circle test.

    Known blind spot: the boundary has probability zero up to float
    granularity, so this is statistically indistinguishable from correct.
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    x, y = _draw_points(n, source)
    hits = int(np.count_nonzero(x * x + y * y < 1.0))
    return 4 * hits / n


def pi_one_coordinate(n: int, source: SeededSource) -> float:
    """Seeded bug: only x is tested, so every sample hits and the estimate is 4."""
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    x, _ = _draw_points(n, source)
    hits = int(np.count_nonzero(x * x <= 1.0))
    return 4 * hits / n


def error_from_pi(estimate: float) -> float:
    return abs(estimate - math.pi)


def make_estimator_pair(large_side: Callable[[int, SeededSource], float]
                        = pi_approximation) -> ProgramPair:
    """Pair the small-budget instantiation against the large-budget one.

    Mutants are injected on the large side only; mutating both sides would
    shift both error distributions together and mask the bug.
    """
    return ProgramPair(
        original=lambda budgets, src: pi_approximation(budgets.n_small, src),
        variant=lambda budgets, src: large_side(budgets.n_large, src),
        descriptor=MONTECARLO_DESCRIPTOR,
    )


def make_convergence_relation(repetitions: int) -> IntramorphicRelation:
    """More samples must not land farther from pi, on median-of-k errors."""
    return IntramorphicRelation(
        name="more-samples-at-least-as-close",
        check=lambda small_est, large_est: error_from_pi(small_est) >= error_from_pi(large_est),
        statistical=StatisticalConfig(repetitions=repetitions, summary=error_from_pi,
                                      compare=operator.ge),
    )


def convergence_relation(budgets: SampleBudgetPair, source: SeededSource) -> RelationOutcome:
    """One median-of-k convergence check, with entropy drawn from ``source``."""
    pair = make_estimator_pair()
    relation = make_convergence_relation(budgets.repetitions)
    case = InputCase(budgets, Provenance(seed=source.next_u64(), iteration=0))
    return evaluate_pair(pair, relation, case)


MONTECARLO_MUTANTS: dict[str, Callable[[int, SeededSource], float]] = {
    "wrong-scale": pi_wrong_scale,
    "boundary-strict": pi_boundary_strict,
    "one-coordinate": pi_one_coordinate,
}


def inject_montecarlo_mutant(name: str) -> Callable[[int, SeededSource], float]:
    try:
        return MONTECARLO_MUTANTS[name]
    except KeyError:
        raise UnknownMutantError(
            f"unknown estimator mutant {name!r}; known: {sorted(MONTECARLO_MUTANTS)}") from None

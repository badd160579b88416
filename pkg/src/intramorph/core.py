"""Core vocabulary: program pairs, relations, outcomes, and their evaluation.

A variant program is derived from an original by swapping one component; the
declared relation between the two outputs on a shared input is the oracle.
Everything here is pure given the input's provenance, so any outcome can be
reproduced from (seed, iteration) alone.
"""

from __future__ import annotations

import signal
import statistics
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional

from .seeds import SeededSource, derive_seed

DEFAULT_BUDGET_SECONDS = 5.0

# Salt layout under (seed, iteration): keeps generation, the two program
# executions, and auxiliary picks on disjoint substreams.
_SALT_GENERATE = 0
_SALT_ORIGINAL = 1
_SALT_VARIANT = 2
_SALT_PICKER = 3


class IntramorphError(Exception):
    """Base class for framework errors."""


class ConfigurationError(IntramorphError):
    """Invalid campaign configuration; no partial results are produced."""


class UnknownCampaignError(ConfigurationError):
    pass


class UnknownMutantError(ConfigurationError):
    pass


class BudgetExceededError(IntramorphError):
    """A program exceeded its execution budget (time or search size)."""


class RelationStatus(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    EXECUTION_ERROR = "execution-error"


class Granularity(str, Enum):
    OPERATOR = "operator"
    FUNCTION_ADDED = "function-added"
    PARAMETER_ADDED = "parameter-added"
    ALGORITHM_REPLACED = "algorithm-replaced"


class ApplicationMode(str, Enum):
    ADDED_ALONGSIDE = "added-alongside"
    IN_PLACE_MODIFIED = "in-place-modified"


class Automation(str, Enum):
    MANUAL = "manual"
    MECHANICAL = "mechanical"


@dataclass(frozen=True)
class TransformationDescriptor:
    """How the variant was derived from the original, for cataloguing."""

    granularity: Granularity
    application_mode: ApplicationMode
    automation: Automation
    relation_complete: bool
    false_alarm_possible: bool

    def __post_init__(self) -> None:
        for field_name in ("granularity", "application_mode", "automation",
                           "relation_complete", "false_alarm_possible"):
            if getattr(self, field_name) is None:
                raise ValueError(f"descriptor field {field_name} must be populated")

    def summary(self) -> str:
        return (f"granularity={self.granularity.value} "
                f"application={self.application_mode.value} "
                f"automation={self.automation.value} "
                f"complete={'yes' if self.relation_complete else 'no'} "
                f"false-alarms={'possible' if self.false_alarm_possible else 'no'}")


@dataclass(frozen=True)
class Provenance:
    """Root seed plus iteration index; regenerates the payload exactly."""

    seed: int
    iteration: int


@dataclass(frozen=True)
class InputCase:
    payload: Any
    provenance: Provenance


@dataclass(frozen=True)
class ProgramPair:
    """Original and variant as pure functions of (payload, source).

    Both callables must be deterministic given their arguments; stochastic
    programs draw all randomness from the explicit source. Payloads are
    immutable values, so neither side can disturb the other.
    """

    original: Callable[[Any, SeededSource], Any]
    variant: Callable[[Any, SeededSource], Any]
    descriptor: TransformationDescriptor


@dataclass(frozen=True)
class StatisticalConfig:
    """Median-of-k aggregation for relations that can raise false alarms.

    ``summary`` maps one output to the scalar the relation is really about,
    and ``compare`` must agree with the owning relation's ``check`` in the
    sense that check(o, v) == compare(summary(o), summary(v)).
    """

    repetitions: int
    summary: Callable[[Any], float]
    compare: Callable[[float, float], bool]
    aggregator: str = "median"

    def __post_init__(self) -> None:
        if self.repetitions < 1 or self.repetitions % 2 == 0:
            raise ConfigurationError(
                f"statistical repetitions must be a positive odd integer, got {self.repetitions}")
        if self.aggregator != "median":
            raise ConfigurationError(f"unsupported aggregator {self.aggregator!r}")


@dataclass(frozen=True)
class IntramorphicRelation:
    """Total predicate over (original output, variant output)."""

    name: str
    check: Callable[[Any, Any], bool]
    statistical: Optional[StatisticalConfig] = None

    def recheck_outputs(self, original_output: Any, variant_output: Any) -> bool:
        """Re-validate the outputs attached to an outcome.

        For statistical relations the attached outputs are the per-side
        median summaries, so the median comparison applies, not ``check``.
        """
        if self.statistical is not None:
            return self.statistical.compare(original_output, variant_output)
        return self.check(original_output, variant_output)


@dataclass(frozen=True)
class RelationOutcome:
    status: RelationStatus
    original_output: Any = None
    variant_output: Any = None
    error_detail: Optional[str] = None

    @staticmethod
    def from_check(passed: bool, original_output: Any, variant_output: Any) -> "RelationOutcome":
        status = RelationStatus.HOLDS if passed else RelationStatus.VIOLATED
        return RelationOutcome(status, original_output, variant_output)

    @staticmethod
    def execution_error(detail: str) -> "RelationOutcome":
        return RelationOutcome(RelationStatus.EXECUTION_ERROR, error_detail=detail)


def generation_source(seed: int, iteration: int) -> SeededSource:
    return SeededSource(derive_seed(seed, iteration, _SALT_GENERATE))


def original_source(provenance: Provenance, trial: int) -> SeededSource:
    return SeededSource(derive_seed(provenance.seed, provenance.iteration, _SALT_ORIGINAL, trial))


def variant_source(provenance: Provenance, trial: int) -> SeededSource:
    return SeededSource(derive_seed(provenance.seed, provenance.iteration, _SALT_VARIANT, trial))


def picker_source(provenance: Provenance) -> SeededSource:
    return SeededSource(derive_seed(provenance.seed, provenance.iteration, _SALT_PICKER))


class _BudgetExpired(Exception):
    pass


def _call_with_budget(fn: Callable[..., Any], args: tuple, budget: Optional[float]) -> Any:
    """Run fn(*args), raising _BudgetExpired if it exceeds the wall-clock budget.

    Uses an interval timer on the main thread (cheap per call); off the main
    thread it falls back to a daemon worker joined with a timeout. A timed-out
    worker cannot be killed, only abandoned.
    """
    if budget is None:
        return fn(*args)

    if threading.current_thread() is threading.main_thread():
        def _on_alarm(signum, frame):
            raise _BudgetExpired()

        previous = signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, budget)
        try:
            return fn(*args)
        finally:
            signal.setitimer(signal.ITIMER_REAL, 0.0)
            signal.signal(signal.SIGALRM, previous)

    box: dict = {}

    def _worker():
        try:
            box["value"] = fn(*args)
        except BaseException as exc:  # propagated to the caller below
            box["error"] = exc

    worker = threading.Thread(target=_worker, daemon=True)
    worker.start()
    worker.join(budget)
    if worker.is_alive():
        raise _BudgetExpired()
    if "error" in box:
        raise box["error"]
    return box["value"]


def _run_program(fn: Callable, payload: Any, source: SeededSource,
                 budget: Optional[float]) -> tuple[bool, Any]:
    """Returns (True, output) or (False, error detail)."""
    try:
        return True, _call_with_budget(fn, (payload, source), budget)
    except _BudgetExpired:
        return False, f"execution budget of {budget}s exceeded"
    except Exception as exc:
        return False, f"{type(exc).__name__}: {exc}"


def evaluate_pair(pair: ProgramPair, relation: IntramorphicRelation, case: InputCase,
                  *, budget: Optional[float] = DEFAULT_BUDGET_SECONDS) -> RelationOutcome:
    """Run both programs on the input and judge the relation between the outputs.

    Each side receives its own source derived from the case's provenance, so
    the outcome is a pure function of (pair, relation, case). A relation with
    a statistical config is aggregated median-of-k; a crash or budget overrun
    on either side yields EXECUTION_ERROR rather than an exception.
    """
    if (relation.statistical is not None) != pair.descriptor.false_alarm_possible:
        raise ConfigurationError(
            "statistical config must be present exactly when the descriptor "
            "declares false alarms possible")
    if relation.statistical is None:
        return _evaluate_single(pair, relation, case, budget)
    return statistical_evaluate(pair, relation, case, relation.statistical.repetitions,
                                budget=budget)


def _evaluate_single(pair: ProgramPair, relation: IntramorphicRelation, case: InputCase,
                     budget: Optional[float]) -> RelationOutcome:
    ok, original_out = _run_program(pair.original, case.payload,
                                    original_source(case.provenance, 0), budget)
    if not ok:
        return RelationOutcome.execution_error(f"original: {original_out}")
    ok, variant_out = _run_program(pair.variant, case.payload,
                                   variant_source(case.provenance, 0), budget)
    if not ok:
        return RelationOutcome.execution_error(f"variant: {variant_out}")
    return RelationOutcome.from_check(relation.check(original_out, variant_out),
                                      original_out, variant_out)


def statistical_evaluate(pair: ProgramPair, relation: IntramorphicRelation, case: InputCase,
                         repetitions: int, *,
                         budget: Optional[float] = DEFAULT_BUDGET_SECONDS) -> RelationOutcome:
    """Median-of-k evaluation: each side runs k times on derived sub-sources.

    The outcome's outputs are the two median summaries (they are what the
    comparison was applied to). With k=1 the verdict coincides with the
    plain single-run evaluation.
    """
    config = relation.statistical
    if config is None:
        raise ConfigurationError(
            f"relation {relation.name!r} has no statistical config")
    if repetitions < 1 or repetitions % 2 == 0:
        raise ConfigurationError(
            f"statistical repetitions must be a positive odd integer, got {repetitions}")

    original_summaries = []
    variant_summaries = []
    for trial in range(repetitions):
        ok, out = _run_program(pair.original, case.payload,
                               original_source(case.provenance, trial), budget)
        if not ok:
            return RelationOutcome.execution_error(f"original trial {trial}: {out}")
        original_summaries.append(config.summary(out))
        ok, out = _run_program(pair.variant, case.payload,
                               variant_source(case.provenance, trial), budget)
        if not ok:
            return RelationOutcome.execution_error(f"variant trial {trial}: {out}")
        variant_summaries.append(config.summary(out))

    original_median = statistics.median(original_summaries)
    variant_median = statistics.median(variant_summaries)
    return RelationOutcome.from_check(config.compare(original_median, variant_median),
                                      original_median, variant_median)


def equivalence_relation() -> IntramorphicRelation:
    """Relation for semantics-preserving replacements: outputs must be equal.

    Covers interchangeable components, e.g. one sorting algorithm swapped
    for another with identical observable behavior.
    """
    return IntramorphicRelation(name="equivalence", check=lambda o, v: o == v)

"""The default campaign registry: four case studies, eight runnable oracles.

Each builder wires a generator, an evaluator factory (which swaps mutated
components in), renderers, and the mutant catalog into one Campaign.
"""

from __future__ import annotations

from typing import Optional

from .baselines import (UnitCase, differential_oracle, metamorphic_removal_oracle,
                        unit_oracle)
from .campaign import Campaign, Mutant
from .cases import ast_printing, knapsack, montecarlo, sorting
from .core import (ApplicationMode, Automation, Granularity, InputCase,
                   IntramorphicRelation, ProgramPair, RelationOutcome,
                   TransformationDescriptor, UnknownCampaignError, equivalence_relation,
                   evaluate_pair, picker_source)
from .generators import (DEFAULT_CONFIG, random_array, random_knapsack_instance,
                         random_tree, shrink_knapsack, shrink_payload, shrink_tree)

UNIT_CASE = UnitCase(values=(3, 1, 2), expected=(1, 2, 3))

SORTING_REVERSE_DESCRIPTOR = TransformationDescriptor(
    granularity=Granularity.OPERATOR,
    application_mode=ApplicationMode.ADDED_ALONGSIDE,
    automation=Automation.MANUAL,
    relation_complete=True,
    false_alarm_possible=False,
)

SORTING_EQUIVALENCE_DESCRIPTOR = TransformationDescriptor(
    granularity=Granularity.ALGORITHM_REPLACED,
    application_mode=ApplicationMode.ADDED_ALONGSIDE,
    automation=Automation.MANUAL,
    relation_complete=True,
    false_alarm_possible=False,
)

AST_DESCRIPTOR = TransformationDescriptor(
    granularity=Granularity.FUNCTION_ADDED,
    application_mode=ApplicationMode.ADDED_ALONGSIDE,
    automation=Automation.MANUAL,
    relation_complete=True,
    false_alarm_possible=False,
)

KNAPSACK_DESCRIPTOR = TransformationDescriptor(
    granularity=Granularity.ALGORITHM_REPLACED,
    application_mode=ApplicationMode.ADDED_ALONGSIDE,
    automation=Automation.MANUAL,
    relation_complete=True,
    false_alarm_possible=False,
)

REVERSE_RELATION = IntramorphicRelation(
    name="reverse-order", check=sorting.reverse_relation)

_SWAP_INDEX_SUMMARY = "ascending sort's swap reads the outer index i instead of j"


def _sort_program(sort_fn):
    return lambda payload, src: sort_fn(list(payload))


def _render_array(payload) -> str:
    return str(list(payload))


def _ascending_sort_for(mutant: Optional[str]):
    return sorting.bubble_sort_swap_index if mutant == "swap-index-i" else sorting.bubble_sort


def _build_sorting_unit() -> Campaign:
    def build(mutant, repetitions, budget):
        sort_fn = _ascending_sort_for(mutant)

        def evaluate(case: InputCase) -> RelationOutcome:
            return unit_oracle(sort_fn, case.payload)

        return evaluate

    return Campaign(
        name="sorting-unit",
        case_study="sorting",
        oracle_style="unit",
        generate=lambda src: UNIT_CASE,   # a unit test re-checks its fixed case
        build_evaluator=build,
        render_payload=lambda case: (f"sort({list(case.values)}) "
                                     f"== {list(case.expected)}"),
        shrink_payload=lambda payload: [],
        render_output=lambda out: str(out),
        mutants=(Mutant("swap-index-i", _SWAP_INDEX_SUMMARY),),
    )


def _build_sorting_differential() -> Campaign:
    def build(mutant, repetitions, budget):
        algorithms = [_ascending_sort_for(mutant), sorting.merge_sort,
                      sorting.insertion_sort]

        def evaluate(case: InputCase) -> RelationOutcome:
            return differential_oracle(algorithms, case.payload)

        return evaluate

    return Campaign(
        name="sorting-differential",
        case_study="sorting",
        oracle_style="differential",
        generate=lambda src: random_array(src, DEFAULT_CONFIG.array),
        build_evaluator=build,
        render_payload=_render_array,
        shrink_payload=shrink_payload,
        mutants=(Mutant("swap-index-i", _SWAP_INDEX_SUMMARY),),
    )


def _build_sorting_metamorphic() -> Campaign:
    def build(mutant, repetitions, budget):
        sort_fn = _ascending_sort_for(mutant)

        def evaluate(case: InputCase) -> RelationOutcome:
            if len(case.payload) == 0:
                # removal is undefined on empty input; vacuously holds
                return RelationOutcome.from_check(True, [], [])
            return metamorphic_removal_oracle(sort_fn, case.payload,
                                              picker_source(case.provenance))

        return evaluate

    return Campaign(
        name="sorting-metamorphic",
        case_study="sorting",
        oracle_style="metamorphic",
        generate=lambda src: random_array(src, DEFAULT_CONFIG.array),
        build_evaluator=build,
        render_payload=_render_array,
        shrink_payload=shrink_payload,
        mutants=(Mutant("swap-index-i", _SWAP_INDEX_SUMMARY),),
    )


def _build_sorting_intramorphic() -> Campaign:
    pairs = {
        None: (sorting.bubble_sort, sorting.bubble_sort_reverse),
        "swap-index-i": (sorting.bubble_sort_swap_index, sorting.bubble_sort_reverse),
        # the descending twin is mechanically derived from the buggy ascending
        # sort, so this mutant leaves BOTH sides buggy
        "comparison-flip-reverse": (sorting.bubble_sort_swap_index,
                                    sorting.bubble_sort_reverse_swap_index),
        "sort-ascending-in-reverse": (sorting.bubble_sort,
                                      sorting.bubble_sort_reverse_not_flipped),
    }

    def build(mutant, repetitions, budget):
        forward, reverse = pairs[mutant]
        pair = ProgramPair(_sort_program(forward), _sort_program(reverse),
                           SORTING_REVERSE_DESCRIPTOR)
        return lambda case: evaluate_pair(pair, REVERSE_RELATION, case, budget=budget)

    return Campaign(
        name="sorting-intramorphic",
        case_study="sorting",
        oracle_style="intramorphic",
        generate=lambda src: random_array(src, DEFAULT_CONFIG.array),
        build_evaluator=build,
        render_payload=_render_array,
        shrink_payload=shrink_payload,
        descriptor=SORTING_REVERSE_DESCRIPTOR,
        mutants=(
            Mutant("swap-index-i", _SWAP_INDEX_SUMMARY),
            Mutant("comparison-flip-reverse",
                   "descending twin inherits the swap-index bug (both sides buggy)"),
            Mutant("sort-ascending-in-reverse",
                   "descending twin forgot to flip the comparison"),
        ),
    )


def _build_sorting_equivalence() -> Campaign:
    def build(mutant, repetitions, budget):
        pair = ProgramPair(_sort_program(_ascending_sort_for(mutant)),
                           _sort_program(sorting.merge_sort),
                           SORTING_EQUIVALENCE_DESCRIPTOR)
        relation = equivalence_relation()
        return lambda case: evaluate_pair(pair, relation, case, budget=budget)

    return Campaign(
        name="sorting-equivalence",
        case_study="sorting",
        oracle_style="intramorphic",
        generate=lambda src: random_array(src, DEFAULT_CONFIG.array),
        build_evaluator=build,
        render_payload=_render_array,
        shrink_payload=shrink_payload,
        descriptor=SORTING_EQUIVALENCE_DESCRIPTOR,
        mutants=(Mutant("swap-index-i", _SWAP_INDEX_SUMMARY),),
    )


TOKEN_RELATION = IntramorphicRelation(
    name="token-multiset",
    check=lambda infix_text, pp: ast_printing.token_texts_match(infix_text, pp[0], pp[1]))


def _build_ast_campaign() -> Campaign:
    def build(mutant, repetitions, budget):
        infix = ast_printing.inject_ast_mutant(mutant) if mutant else ast_printing.as_string_infix
        pair = ProgramPair(
            original=lambda tree, src: infix(tree),
            variant=lambda tree, src: (ast_printing.as_string_prefix(tree),
                                       ast_printing.as_string_postfix(tree)),
            descriptor=AST_DESCRIPTOR)
        return lambda case: evaluate_pair(pair, TOKEN_RELATION, case, budget=budget)

    return Campaign(
        name="ast-token-multiset",
        case_study="ast",
        oracle_style="intramorphic",
        generate=lambda src: random_tree(src, DEFAULT_CONFIG.tree),
        build_evaluator=build,
        render_payload=ast_printing.render_tree,
        shrink_payload=shrink_tree,
        descriptor=AST_DESCRIPTOR,
        mutants=(
            Mutant("paren-left-as-right",
                   "right operand's parentheses wrap the left operand's text"),
            Mutant("drop-right-operand", "infix omits the right operand"),
            Mutant("paren-missing", "parentheses never added",
                   expected_detected=False,
                   note="blind spot: the relation strips parentheses before comparing"),
        ),
    )


DEFAULT_BUDGETS = montecarlo.SampleBudgetPair()


def _build_montecarlo_campaign() -> Campaign:
    def build(mutant, repetitions, budget):
        estimator = (montecarlo.inject_montecarlo_mutant(mutant) if mutant
                     else montecarlo.pi_approximation)
        pair = montecarlo.make_estimator_pair(estimator)
        relation = montecarlo.make_convergence_relation(
            repetitions if repetitions is not None else DEFAULT_BUDGETS.repetitions)
        return lambda case: evaluate_pair(pair, relation, case, budget=budget)

    return Campaign(
        name="montecarlo-convergence",
        case_study="montecarlo",
        oracle_style="intramorphic",
        generate=lambda src: DEFAULT_BUDGETS,   # per-iteration entropy comes from provenance
        build_evaluator=build,
        render_payload=lambda budgets: (f"n_small={budgets.n_small}, "
                                        f"n_large={budgets.n_large}, "
                                        f"repetitions={budgets.repetitions}"),
        shrink_payload=lambda payload: [],
        descriptor=montecarlo.MONTECARLO_DESCRIPTOR,
        stochastic=True,
        default_repetitions=DEFAULT_BUDGETS.repetitions,
        mutants=(
            Mutant("wrong-scale", "estimator returns 2*hits/n and converges to pi/2"),
            Mutant("boundary-strict", "circle test uses < instead of <=",
                   expected_detected=False,
                   note="blind spot: the boundary has probability zero"),
            Mutant("one-coordinate", "only x is tested, estimate pegs at 4"),
        ),
    )


def _knapsack_check(greedy_solution, exhaustive_solution) -> bool:
    # feasibility is folded in so capacity overruns surface as violations
    return (greedy_solution.feasible and exhaustive_solution.feasible
            and knapsack.optimality_relation(exhaustive_solution, greedy_solution))


KNAPSACK_RELATION = IntramorphicRelation(
    name="replacement-at-least-as-good", check=_knapsack_check)


def _build_knapsack_campaign() -> Campaign:
    def build(mutant, repetitions, budget):
        greedy_fn = knapsack.knapsack_greedy
        exhaustive_fn = knapsack.knapsack_exhaustive
        if mutant == "exhaustive-skip-include":
            exhaustive_fn = knapsack.inject_knapsack_mutant(mutant)
        elif mutant is not None:
            greedy_fn = knapsack.inject_knapsack_mutant(mutant)
        pair = ProgramPair(
            original=lambda instance, src: greedy_fn(instance),
            variant=lambda instance, src: exhaustive_fn(instance),
            descriptor=KNAPSACK_DESCRIPTOR)
        return lambda case: evaluate_pair(pair, KNAPSACK_RELATION, case, budget=budget)

    return Campaign(
        name="knapsack-optimality",
        case_study="knapsack",
        oracle_style="intramorphic",
        generate=lambda src: random_knapsack_instance(src, DEFAULT_CONFIG.knapsack),
        build_evaluator=build,
        render_payload=knapsack.render_instance,
        shrink_payload=shrink_knapsack,
        render_output=knapsack.render_solution,
        descriptor=KNAPSACK_DESCRIPTOR,
        mutants=(
            Mutant("exhaustive-skip-include",
                   "exhaustive search never takes the include branch, packs nothing"),
            Mutant("greedy-capacity-off-by-one",
                   "greedy fill admits one weight unit beyond the capacity"),
            Mutant("greedy-sort-ascending",
                   "greedy considers the worst value density first",
                   expected_detected=False, in_matrix=False,
                   note="per-input relation still holds (greedy only loses value); "
                        "surfaces only as a higher strictly-better rate"),
        ),
    )


_REGISTRY: Optional[dict[str, Campaign]] = None


def default_registry() -> dict[str, Campaign]:
    global _REGISTRY
    if _REGISTRY is None:
        campaigns = (
            _build_sorting_unit(),
            _build_sorting_differential(),
            _build_sorting_metamorphic(),
            _build_sorting_intramorphic(),
            _build_sorting_equivalence(),
            _build_ast_campaign(),
            _build_montecarlo_campaign(),
            _build_knapsack_campaign(),
        )
        _REGISTRY = {campaign.name: campaign for campaign in campaigns}
    return _REGISTRY


def all_campaigns() -> tuple[Campaign, ...]:
    return tuple(default_registry().values())


def get_campaign(name: str) -> Campaign:
    registry = default_registry()
    if name not in registry:
        raise UnknownCampaignError(
            f"unknown campaign {name!r}; known: {sorted(registry)}")
    return registry[name]

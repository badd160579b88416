#!/usr/bin/env python3
"""Measure how often the pi convergence check fails without aggregation.

A single unlucky trial can leave the small-sample estimate closer to pi than
the large-sample one. This script quantifies that false-alarm rate at k=1 and
contrasts it with the median-of-k campaign at the same seed.
"""

import argparse

from intramorph.harness import CampaignConfig, run_campaign


def violation_rate(seed: int, iterations: int, repetitions: int) -> float:
    report = run_campaign(CampaignConfig(
        campaign="montecarlo-convergence", seed=seed, iterations=iterations,
        statistical_repetitions=repetitions, stop_on_first_violation=False))
    return report.violations / report.iterations_run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--iterations", type=int, default=1000)
    parser.add_argument("--k", type=int, default=5,
                        help="repetitions for the aggregated comparison run")
    args = parser.parse_args()

    single = violation_rate(args.seed, args.iterations, repetitions=1)
    aggregated = violation_rate(args.seed, args.iterations, repetitions=args.k)
    print(f"seed={args.seed} iterations={args.iterations}")
    print(f"single-trial (k=1) violation rate:  {single:.4%}")
    print(f"median-of-{args.k} violation rate:      {aggregated:.4%}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

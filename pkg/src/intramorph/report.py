"""Report documents and their JSON/CSV serialization.

Field order is fixed and optional fields are omitted when absent, so two
runs with the same configuration serialize byte-identically apart from
wall_time_ms (which is always last).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

from .campaign import Campaign
from .harness import CampaignReport, MatrixReport

SCHEMA_VERSION = "1"

CAMPAIGN_CSV_COLUMNS = [
    "schema_version", "campaign", "seed", "mutant", "iterations_run", "violations",
    "first_violation_iteration", "counterexample_input", "counterexample_output_original",
    "counterexample_output_variant", "execution_errors", "statistical_repetitions",
    "wall_time_ms",
]

MATRIX_CSV_COLUMNS = [
    "schema_version", "seed", "iterations", "campaign", "mutant", "detected",
    "first_violation_iteration", "violations", "iterations_run", "execution_errors",
    "expected_detected",
]


def campaign_report_document(report: CampaignReport, campaign: Campaign) -> dict:
    """Flat ordered mapping for one campaign run; wall_time_ms is last."""
    document: dict = {
        "schema_version": SCHEMA_VERSION,
        "campaign": report.campaign,
        "seed": report.seed,
    }
    if report.mutant is not None:
        document["mutant"] = report.mutant
    document["iterations_run"] = report.iterations_run
    document["violations"] = report.violations
    if report.first_violation_iteration is not None:
        document["first_violation_iteration"] = report.first_violation_iteration
    if report.counterexample is not None:
        document["counterexample"] = {
            "input": campaign.render_payload(report.counterexample.payload),
            "output_original": campaign.render_output(report.counterexample.original_output),
            "output_variant": campaign.render_output(report.counterexample.variant_output),
        }
    document["execution_errors"] = report.execution_errors
    if report.statistical_repetitions is not None:
        document["statistical_repetitions"] = report.statistical_repetitions
    document["wall_time_ms"] = report.wall_time_ms
    return document


def matrix_report_document(matrix: MatrixReport) -> dict:
    cells = []
    for cell in matrix.cells:
        entry: dict = {
            "campaign": cell.campaign,
            "mutant": cell.mutant if cell.mutant is not None else "none",
            "detected": cell.detected,
        }
        if cell.first_violation_iteration is not None:
            entry["first_violation_iteration"] = cell.first_violation_iteration
        entry["violations"] = cell.violations
        entry["iterations_run"] = cell.iterations_run
        entry["execution_errors"] = cell.execution_errors
        if cell.expected_detected is not None:
            entry["expected_detected"] = cell.expected_detected
        cells.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": matrix.seed,
        "iterations": matrix.iterations,
        "cells": cells,
        "wall_time_ms": matrix.wall_time_ms,
    }


def to_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def campaign_report_csv(document: dict) -> str:
    counterexample = document.get("counterexample", {})
    row = [
        document["schema_version"],
        document["campaign"],
        document["seed"],
        document.get("mutant", ""),
        document["iterations_run"],
        document["violations"],
        document.get("first_violation_iteration", ""),
        counterexample.get("input", ""),
        counterexample.get("output_original", ""),
        counterexample.get("output_variant", ""),
        document["execution_errors"],
        document.get("statistical_repetitions", ""),
        document["wall_time_ms"],
    ]
    return _csv_text(CAMPAIGN_CSV_COLUMNS, [row])


def matrix_report_csv(document: dict) -> str:
    rows = []
    for cell in document["cells"]:
        rows.append([
            document["schema_version"],
            document["seed"],
            document["iterations"],
            cell["campaign"],
            cell["mutant"],
            str(cell["detected"]).lower(),
            cell.get("first_violation_iteration", ""),
            cell["violations"],
            cell["iterations_run"],
            cell["execution_errors"],
            "" if "expected_detected" not in cell
            else str(cell["expected_detected"]).lower(),
        ])
    return _csv_text(MATRIX_CSV_COLUMNS, rows)


def emit_report(text: str, path: Optional[str]) -> None:
    """Write the serialized report to the given path, or stdout when absent."""
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)

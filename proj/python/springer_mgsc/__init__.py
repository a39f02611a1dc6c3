"""Counting layer of the modular generalized Springer correspondence."""

import json

from ._core import (
    ArgumentError,
    BudgetExceededError,
    ConsistencyError,
    DataError,
    InvalidCharacterError,
    SpringerError,
    SpringerTypeError,
    basic_set,
    class_count,
    count_l_regular,
    cuspidal_count,
    cuspidal_pairs,
    decomposition_matrix_ids,
    pairs,
    pairs_count,
    report,
    sylow_class,
)

__all__ = [
    "ArgumentError",
    "BudgetExceededError",
    "ConsistencyError",
    "DataError",
    "InvalidCharacterError",
    "SpringerError",
    "SpringerTypeError",
    "basic_set",
    "class_count",
    "count_l_regular",
    "cuspidal_count",
    "cuspidal_pairs",
    "decomposition_matrix_ids",
    "pairs",
    "pairs_count",
    "report",
    "report_json",
    "sylow_class",
    "verify_all",
]


def report_json(kind, **kwargs):
    """The report as a Python object."""
    return json.loads(report(kind, format="json", **kwargs))


def verify_all():
    """Runs every golden comparison; returns (ok, summary per group)."""
    doc = report_json("verify")
    return doc["ok"], doc["summary"]

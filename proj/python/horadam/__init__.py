"""Exact Horadam sequences, reciprocal-sum enclosures and asymptotic estimates."""

from ._core import (
    HoradamError,
    RecurrenceParams,
    WeightedSelector,
    decay_fit,
    estimate_block,
    estimate_general,
    partial_sum,
    round_identity_scan,
    sqrt_enclosure,
    sum_enclosure,
    validity_check,
    verify_run,
    w_fast,
    w_iter,
    w_range,
    weighted_denominator,
)

__all__ = [
    "HoradamError",
    "RecurrenceParams",
    "WeightedSelector",
    "decay_fit",
    "estimate_block",
    "estimate_general",
    "partial_sum",
    "round_identity_scan",
    "sqrt_enclosure",
    "sum_enclosure",
    "validity_check",
    "verify_run",
    "w_fast",
    "w_iter",
    "w_range",
    "weighted_denominator",
]

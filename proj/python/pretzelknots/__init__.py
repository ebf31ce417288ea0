"""Exact concordance invariants of 3-strand pretzel knots."""

from ._core import (
    canonical,
    determinant,
    g4_lower_bound,
    is_knot,
    negative_continued_fraction,
    qm,
    report,
    s_invariant,
    signature,
    signature_oracle,
    squeeze,
    tau_profile,
    tau_sequence,
)

__all__ = [
    "canonical",
    "determinant",
    "g4_lower_bound",
    "is_knot",
    "negative_continued_fraction",
    "qm",
    "report",
    "s_invariant",
    "signature",
    "signature_oracle",
    "squeeze",
    "tau_profile",
    "tau_sequence",
]

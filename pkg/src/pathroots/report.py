"""Structured pass/fail records for identity and theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a single check, with enough detail to audit a failure.

    ``tolerance_used`` is the string ``"exact"`` for integer/rational
    comparisons and a float for toleranced numeric checks.  A failing
    report always carries nonempty ``witnesses``.
    """

    check_name: str
    subject: dict[str, Any]
    passed: bool
    witnesses: dict[str, Any] = field(default_factory=dict)
    tolerance_used: float | str = "exact"

    def __post_init__(self) -> None:
        if not self.passed and not self.witnesses:
            raise ValueError("failing report must carry witnesses")

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_name": self.check_name,
            "subject": _plain(self.subject),
            "passed": self.passed,
            "witnesses": _plain(self.witnesses),
            "tolerance_used": self.tolerance_used,
        }


def _plain(obj: Any) -> Any:
    """Coerce nested values to JSON-serializable builtins."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        # big integers round-trip through JSON as strings past 2**53
        return obj if abs(obj) < 2**53 else str(obj)
    if isinstance(obj, float):
        return obj
    return str(obj)

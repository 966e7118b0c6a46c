"""Check reports: typed pass/fail rows with tolerances and provenance tags.

Tags say how the expected value was obtained: "analytic" for closed-form
theory values, "oracle" for values computed by an independent brute-force
route, "exact" for structural identities.  JSON output is deterministic:
identical inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

TAGS = ("analytic", "oracle", "exact")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["scenario", "passed", "failed", "all_passed", "checks"],
    "properties": {
        "scenario": {"type": "string"},
        "passed": {"type": "integer", "minimum": 0},
        "failed": {"type": "integer", "minimum": 0},
        "all_passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["description", "expected", "computed",
                             "tolerance", "passed", "tag"],
                "properties": {
                    "description": {"type": "string"},
                    "tolerance": {"type": "number"},
                    "passed": {"type": "boolean"},
                    "tag": {"enum": list(TAGS)},
                },
            },
        },
    },
}


def _plain(value):
    """Convert numpy scalars/arrays to JSON-friendly python values."""
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass(frozen=True)
class Check:
    description: str
    expected: object
    computed: object
    tolerance: float
    passed: bool
    tag: str

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        object.__setattr__(self, "expected", _plain(self.expected))
        object.__setattr__(self, "computed", _plain(self.computed))

    def to_dict(self) -> dict:
        return {"description": self.description, "expected": self.expected,
                "computed": self.computed, "tolerance": self.tolerance,
                "passed": self.passed, "tag": self.tag}


def check_close(description: str, expected, computed, tolerance: float,
                tag: str) -> Check:
    e = np.asarray(expected, dtype=float)
    c = np.asarray(computed, dtype=float)
    passed = e.shape == c.shape and bool(np.abs(e - c).max() <= tolerance) \
        if e.size else True
    return Check(description, expected, computed, tolerance, passed, tag)


def check_equal(description: str, expected, computed, tag: str) -> Check:
    return Check(description, expected, computed, 0.0,
                 _plain(expected) == _plain(computed), tag)


def check_true(description: str, computed: bool, tag: str) -> Check:
    return Check(description, True, bool(computed), 0.0, bool(computed), tag)


def check_bound(description: str, computed: float, bound: float, tag: str) -> Check:
    """Passes when ``computed <= bound``."""
    return Check(description, f"<= {bound:g}", float(computed), bound,
                 bool(computed <= bound), tag)


@dataclass
class ScenarioReport:
    scenario: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def passed_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed_count(self) -> int:
        return len(self.checks) - self.passed_count

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def to_dict(self) -> dict:
        return {"scenario": self.scenario, "passed": self.passed_count,
                "failed": self.failed_count, "all_passed": self.all_passed,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        def fmt(value) -> str:
            if isinstance(value, float):
                text = f"{value:.12g}"
            else:
                text = str(value)
            return text if len(text) <= 26 else text[:23] + "..."

        widths = (58, 26, 26, 9, 8, 6)
        header = ("check", "expected", "computed", "tol", "tag", "status")
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)),
                 "  ".join("-" * w for w in widths)]
        for c in self.checks:
            row = (c.description[:widths[0]], fmt(c.expected), fmt(c.computed),
                   f"{c.tolerance:.0e}" if c.tolerance else "exact",
                   c.tag, "pass" if c.passed else "FAIL")
            lines.append("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))
        lines.append(f"{self.scenario}: {self.passed_count} passed, "
                     f"{self.failed_count} failed")
        return "\n".join(lines)

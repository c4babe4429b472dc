"""Verification reports: named checks carrying exact values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
KNOWN = "known-discrepancy"


def exact(value: Any) -> Any:
    """Render a value with exact rationals as ``p/q`` strings, no floats."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    status: str
    values: dict
    ref: str = ""
    note: str = ""

    def to_dict(self) -> dict:
        d = {"check": self.name, "status": self.status, "values": exact(self.values),
             "paper_ref": self.ref}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class VerificationReport:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok, values: dict, ref: str = "", note: str = "") -> Check:
        if ok is None:
            status = NOT_APPLICABLE
        else:
            status = PASS if ok else FAIL
        c = Check(name, status, values, ref, note)
        self.checks.append(c)
        return c

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.values, c.ref, c.note))

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def downgrade(self, known: dict[str, str]) -> None:
        """Mark failures listed in ``known`` as known discrepancies."""
        for c in self.checks:
            if c.status == FAIL and c.name in known:
                c.status = KNOWN
                c.note = known[c.name]

    def to_dict(self) -> dict:
        return {"report": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for c in self.checks:
            vals = ", ".join(f"{k}={_human(v)}" for k, v in exact(c.values).items())
            lines.append(f"[{c.status.upper():>17}] {c.name}" + (f": {vals}" if vals else ""))
            if c.note:
                lines.append(f"{'':20}  note: {c.note}")
        n_fail = len(self.failures)
        lines.append(f"-- {len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines)


def _human(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_human(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_human(x)}" for k, x in v.items()) + "}"
    return str(v)

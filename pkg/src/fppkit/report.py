"""Verification report and JSON rendering of exact values."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS, FAIL, AXIOM = "pass", "fail", "axiom"


def to_jsonable(value: Any) -> Any:
    """Fractions become {"num", "den"}; tuples become lists; never floats."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, float):
        raise TypeError("floating point value in an exact report")
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=lambda v: json.dumps(v, sort_keys=True))
        return items
    if hasattr(value, "__dataclass_fields__"):
        return {k: to_jsonable(getattr(value, k)) for k in value.__dataclass_fields__}
    return str(value)


def render_text(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(render_text(v) for v in value) + ")"
    return str(value)


@dataclass
class Check:
    name: str
    group: str
    anchor: str
    status: str
    expected: Any = None
    computed: Any = None
    note: str = ""

    def as_dict(self) -> dict[str, Any]:
        doc = {
            "name": self.name,
            "group": self.group,
            "anchor": self.anchor,
            "status": self.status,
            "expected": to_jsonable(self.expected),
            "computed": to_jsonable(self.computed),
        }
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, AXIOM: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def as_dict(self) -> dict[str, Any]:
        return {"checks": [c.as_dict() for c in self.checks], "status": self.status}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

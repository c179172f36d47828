"""Structured verification reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .exact import ExactMatrix, Poly


def jsonable(x: Any):
    """Convert exact scalars, matrices and containers into JSON-ready values."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, Poly):
        return str(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, ExactMatrix):
        return [[jsonable(v) for v in row] for row in x.tolist()]
    if isinstance(x, np.ndarray):
        return [jsonable(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


@dataclass
class Check:
    """One identity: whether it holds, and whether it is asserted for this input.

    ``applicable=False`` marks an informational check: the hypothesis of the
    identity is not met, but both sides are still computed and reported.
    """

    name: str
    holds: bool
    expected: Any = None
    got: Any = None
    applicable: bool = True
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "holds": bool(self.holds),
            "applicable": self.applicable,
            "expected": jsonable(self.expected),
            "got": jsonable(self.got),
            "note": self.note,
        }


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name: str, holds: bool, expected=None, got=None, applicable: bool = True, note: str = "") -> Check:
        c = Check(name, bool(holds), expected, got, applicable, note)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        self.info.update(other.info)
        return self

    @property
    def applicable(self) -> list[Check]:
        return [c for c in self.checks if c.applicable]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.applicable)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.applicable if not c.holds]

    @property
    def findings(self) -> list[Check]:
        """Informational checks that did not hold."""
        return [c for c in self.checks if not c.applicable and not c.holds]

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.ok else "fail"

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_obj(self) -> dict:
        return {
            "title": self.title,
            "status": self.status,
            "checks": [c.to_json_obj() for c in self.checks],
            "info": jsonable(self.info),
        }

    def summary(self) -> str:
        lines = [f"{self.title}: {self.status}"]
        for c in self.checks:
            flag = ("ok" if c.holds else "FAIL") if c.applicable else ("(holds)" if c.holds else "(finding)")
            lines.append(f"  {flag:9s} {c.name}")
        return "\n".join(lines)

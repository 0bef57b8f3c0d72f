"""Structured pass/fail results shared by every ``verify_*`` function."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import VerificationFailure


@dataclass
class Check:
    name: str
    status: str
    lhs: Any = None
    rhs: Any = None
    witness: Any = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, lhs=None, rhs=None, witness=None) -> bool:
        self.checks.append(Check(name, "pass" if ok else "fail", lhs, rhs, None if ok else witness))
        return ok

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def raise_on_failure(self) -> None:
        bad = self.failures()
        if bad:
            first = bad[0]
            raise VerificationFailure(f"{len(bad)} check(s) failed, first: {first.name}",
                                      first.witness if first.witness is not None else first.name)

    def to_dict(self) -> list[dict]:
        out = []
        for c in self.checks:
            d = {"name": c.name, "status": c.status, "lhs": jsonable(c.lhs), "rhs": jsonable(c.rhs)}
            if c.witness is not None:
                d["witness"] = jsonable(c.witness)
            out.append(d)
        return out


def jsonable(x):
    """Exact values to JSON: rationals as "num/den", polynomials as sorted pairs."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if hasattr(x, "to_pairs"):
        return x.to_pairs()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    return str(x)

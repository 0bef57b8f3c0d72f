"""Heisenberg modes and the free-boson Virasoro action on the Fock space.

A state is a finite sum  sum_c f_c * Omega_c  with f_c in Lambda (power-sum
basis) and even charges c.  On each charge sector

    h_n = 2n d/dp_n,   h_{-n} = p_n   (n > 0),   h_0 = c.

With a_n = h_n / sqrt(2) the Virasoro modes become

    L_n = 1/4 sum_j h_{-j} h_{j+n}              (n != 0)
    L_0 = 1/4 h_0^2 + 1/2 sum_{j>0} h_{-j} h_j

so every coefficient stays rational.  On charge 0 the zero-mode term of
L_0 vanishes and L_0 is the degree operator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InvalidArgument
from .report import Report
from .symfun import Partition, SymFun, partitions, schur_to_p
from .tableaux import SerpentineTableau, stable_major_index


class FockState:
    """Finite combination of charge sectors, stored as {charge: SymFun}."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, SymFun] | None = None):
        t = {}
        for c, f in (terms or {}).items():
            if c % 2:
                raise InvalidArgument(f"charges must be even, got {c}")
            if f:
                t[int(c)] = f
        self._t = t

    @classmethod
    def vacuum(cls, charge: int = 0) -> "FockState":
        return cls({charge: SymFun.one()})

    @classmethod
    def of(cls, f: SymFun, charge: int = 0) -> "FockState":
        return cls({charge: f})

    def component(self, charge: int) -> SymFun:
        return self._t.get(charge, SymFun())

    def charges(self) -> list[int]:
        return sorted(self._t)

    def items(self):
        return sorted(self._t.items())

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self._t == other._t

    def __add__(self, other):
        t = dict(self._t)
        for c, f in other._t.items():
            s = t.get(c, SymFun()) + f
            if s:
                t[c] = s
            else:
                t.pop(c, None)
        return FockState(t)

    def __neg__(self):
        return FockState({c: -f for c, f in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return FockState({c: f * scalar for c, f in self._t.items()})

    __rmul__ = __mul__

    def max_degree(self) -> int:
        return max((f.max_degree() for f in self._t.values()), default=-1)

    def to_pairs(self):
        return [[c, f.to_pairs()] for c, f in self.items()]

    def __repr__(self):
        if not self._t:
            return "0"
        return " + ".join(f"({f})*Omega[{c}]" for c, f in self.items())


def _h_sym(n: int, f: SymFun) -> SymFun:
    if n > 0:
        return f.derivative(n) * (2 * n)
    return f * SymFun.p(-n)


def h_apply(n: int, s: FockState) -> FockState:
    if n == 0:
        raise InvalidArgument("use charge_apply for h_0")
    return FockState({c: _h_sym(n, f) for c, f in s.items()})


def charge_apply(s: FockState) -> FockState:
    return FockState({c: f * c for c, f in s.items()})


def _h_any(n: int, c: int, f: SymFun) -> SymFun:
    return f * c if n == 0 else _h_sym(n, f)


@lru_cache(maxsize=None)
def _L_basis(n: int, lam: Partition, c: int) -> SymFun:
    f = SymFun({lam: 1})
    d = lam.size
    if n == 0:
        out = f * Fraction(c * c, 4)
        for j in range(1, d + 1):
            out = out + _h_sym(-j, _h_sym(j, f)) * Fraction(1, 2)
        return out
    out = SymFun()
    span = d + abs(n) + 1
    for j in range(-span, span + 1):
        a, b = -j, j + n
        # the two modes commute for n != 0; run the annihilator first
        first, second = (a, b) if a > b else (b, a)
        if first > d:
            continue
        g = _h_any(first, c, f)
        if g:
            out = out + _h_any(second, c, g)
    return out * Fraction(1, 4)


def L_apply(n: int, s: FockState) -> FockState:
    out = {}
    for c, f in s.items():
        acc = SymFun()
        for lam, v in f.items():
            acc = acc + _L_basis(n, lam, c) * v
        out[c] = acc
    return FockState(out)


def d_apply(s: FockState) -> FockState:
    """d = h_0^2/2 + sum_{n>0} h_{-n} h_n."""
    out = charge_apply(charge_apply(s)) * Fraction(1, 2)
    for n in range(1, s.max_degree() + 1):
        out = out + h_apply(-n, h_apply(n, s))
    return out


def _basis_states(degree: int, charges: Iterable[int]) -> list[FockState]:
    return [FockState.of(SymFun({lam: 1}), c)
            for c in charges for d in range(degree + 1) for lam in partitions(d)]


def verify_virasoro_bracket(m: int, n: int, degree: int, charges=(0, 2, -2),
                            strict: bool = False) -> Report:
    """[L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} (m^3-m)/12 on all basis states."""
    report = Report()
    central = Fraction(m ** 3 - m, 12) if m + n == 0 else Fraction(0)
    bad = None
    for s in _basis_states(degree, charges):
        lhs = L_apply(m, L_apply(n, s)) - L_apply(n, L_apply(m, s))
        rhs = L_apply(m + n, s) * (m - n) + s * central
        if lhs != rhs:
            bad = (s, lhs, rhs)
            break
    name = f"[L_{m}, L_{n}] = {m - n} L_{m + n} + {central}"
    if bad:
        report.add(name, False, bad[1], bad[2], witness={"state": bad[0], "m": m, "n": n})
    else:
        report.add(name, True, f"degree<={degree}", f"charges {list(charges)}")
    if strict:
        report.raise_on_failure()
    return report


def verify_heisenberg(degree: int, strict: bool = False) -> Report:
    """[h_m, h_{-m}] = 2m on charge-0 basis states."""
    report = Report()
    for m in range(1, degree + 1):
        ok = True
        for s in _basis_states(degree, (0,)):
            comm = h_apply(m, h_apply(-m, s)) - h_apply(-m, h_apply(m, s))
            if comm != s * (2 * m):
                ok = False
                report.add(f"[h_{m}, h_-{m}] = {2 * m}", False, comm, s * (2 * m), witness=s)
                break
        if ok:
            report.add(f"[h_{m}, h_-{m}] = {2 * m}", True)
    if strict:
        report.raise_on_failure()
    return report


def verify_degree_operator(degree: int, strict: bool = False) -> Report:
    """L_0 f = deg(f) f for every charge-0 power-sum monomial."""
    report = Report()
    for d in range(degree + 1):
        ok = all(L_apply(0, s) == s * d for s in _basis_states_exact(d))
        report.add(f"L_0 = {d} on degree {d}", ok)
    if strict:
        report.raise_on_failure()
    return report


def _basis_states_exact(d: int) -> list[FockState]:
    return [FockState.of(SymFun({lam: 1})) for lam in partitions(d)]


def verify_d_operator(degree: int, charges=(0, 2, -2), strict: bool = False) -> Report:
    report = Report()
    for s in _basis_states(degree, charges):
        lhs, rhs = d_apply(s), L_apply(0, s) * 2
        if lhs != rhs:
            report.add("d = 2 L_0", False, lhs, rhs, witness=s)
            break
    else:
        report.add("d = 2 L_0", True, f"degree<={degree}", f"charges {list(charges)}")
    if strict:
        report.raise_on_failure()
    return report


def verify_singular_vector(k: int, n_max: int = 6, strict: bool = False) -> Report:
    """s_(k^k) is annihilated by L_1..L_{n_max} and has L_0-eigenvalue k^2."""
    report = Report()
    s = FockState.of(schur_to_p((k,) * k))
    for n in range(1, n_max + 1):
        out = L_apply(n, s)
        report.add(f"L_{n} s_({k}^{k}) = 0", not out, out, 0, witness={"k": k, "n": n})
    l0 = L_apply(0, s)
    report.add(f"L_0 s_({k}^{k}) = {k * k} s", l0 == s * (k * k), k * k, k * k,
               witness={"k": k})
    if strict:
        report.raise_on_failure()
    return report


def L0_on_serpentine(t: SerpentineTableau) -> int:
    """L_0-eigenvalue of a serpentine tableau: its stable major index."""
    return stable_major_index(t)

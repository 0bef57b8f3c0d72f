"""Vertex operators on the Fock space and the constant-term oracle.

Conventions, with h_n acting as in :mod:`serpentine.virasoro`:

    Gamma_-(z) = exp( sum_j z^-j / j * h_-j ) = sum_d H_d z^-d     (H_d complete)
    Gamma_+(z) = exp(-sum_j z^j  / j * h_j )  :  f(p_1, p_2, ...) -> f(p_j - 2 z^j)

and E(z) f Omega_c = z^(-(c+2)) Gamma_-(z) Gamma_+(z) f Omega_(c+2): the
lattice shift raises the charge by 2 and z^(-h_0) is evaluated on the shifted
state.  That pair of choices is the one singled out by :func:`calibrate`,
which compares all four candidates against the constant-term oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .linalg import RMatrix, rank
from .report import Report
from .symfun import (Partition, SymFun, complete, kostka_number, partitions,
                     partitions_in_box, schur_expansion, schur_to_p)
from .virasoro import FockState


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


class MultiLaurent:
    """Laurent polynomial in ``nvars`` variables, {exponent tuple: coefficient}.

    Coefficients may be rationals or :class:`SymFun` values; anything with
    ``+``, ``*`` and truthiness works.
    """

    __slots__ = ("nvars", "_t")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        t = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise InvalidArgument(f"exponent {e} does not have {nvars} entries")
            if _is_scalar(c):
                c = Fraction(c)
            if c:
                t[e] = t[e] + c if e in t else c
                if not t[e]:
                    del t[e]
        self._t = t

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> "MultiLaurent":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiLaurent":
        return cls.monomial([1 if j == i else 0 for j in range(nvars)])

    def items(self):
        return sorted(self._t.items())

    def coefficient(self, exponent: Sequence[int]):
        return self._t.get(tuple(exponent), 0)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self._t == other._t

    def _check(self, other):
        if other.nvars != self.nvars:
            raise InvalidArgument("variable counts differ")

    def __add__(self, other):
        self._check(other)
        t = dict(self._t)
        for e, c in other._t.items():
            s = t[e] + c if e in t else c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return MultiLaurent(self.nvars, t)

    def __neg__(self):
        return MultiLaurent(self.nvars, {e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiLaurent):
            return MultiLaurent(self.nvars, {e: c * other for e, c in self._t.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return MultiLaurent(self.nvars, out)

    __rmul__ = __mul__

    def inverted(self) -> "MultiLaurent":
        """Substitute z_i -> 1/z_i."""
        return MultiLaurent(self.nvars, {tuple(-x for x in e): c for e, c in self._t.items()})

    def truncate(self, order: int) -> "MultiLaurent":
        """Keep terms whose exponents have absolute sum <= order."""
        return MultiLaurent(self.nvars, {e: c for e, c in self._t.items()
                                         if sum(abs(x) for x in e) <= order})

    def __repr__(self):
        return f"MultiLaurent({self.nvars}, {dict(self.items())})"


# --- Vandermonde and alternants ---------------------------------------------

def _perm_sign(p: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def vandermonde(k: int) -> MultiLaurent:
    """a_delta(z) = prod_{i<j} (z_i - z_j) as an explicit product."""
    out = MultiLaurent.monomial((0,) * k)
    for i in range(k):
        for j in range(i + 1, k):
            out = out * (MultiLaurent.variable(i, k) - MultiLaurent.variable(j, k))
    return out


def alternant(exponents: Sequence[int]) -> MultiLaurent:
    """det[z_i^{e_j}] = sum_sigma sgn(sigma) prod_j z_{sigma(j)}^{e_j}."""
    k = len(exponents)
    terms = {}
    for perm in permutations(range(k)):
        e = [0] * k
        for j, i in enumerate(perm):
            e[i] = exponents[j]
        terms[tuple(e)] = terms.get(tuple(e), 0) + _perm_sign(perm)
    return MultiLaurent(k, terms)


def vandermonde_determinant(k: int) -> MultiLaurent:
    return alternant([k - 1 - j for j in range(k)])


def _delta(k: int) -> list[int]:
    return [k - 1 - j for j in range(k)]


def power_sum_evaluation(f: SymFun, k: int) -> MultiLaurent:
    """f(z_1, ..., z_k) with p_j -> z_1^j + ... + z_k^j."""
    out = MultiLaurent(k)
    for lam, v in f.items():
        term = MultiLaurent.monomial((0,) * k, v)
        for part in lam:
            term = term * MultiLaurent(k, {tuple(part if i == j else 0 for j in range(k)): 1
                                            for i in range(k)})
        out = out + term
    return out


# --- Gamma operators ---------------------------------------------------------

def gamma_minus_series(t: int) -> MultiLaurent:
    """sum_{d<=t} H_d z^-d, the one-variable series of Gamma_-(z)."""
    return MultiLaurent(1, {(-d,): complete(d) for d in range(t + 1)})


def gamma_plus_coefficient(a: int, f: SymFun) -> SymFun:
    """Coefficient of z^a in Gamma_+(z) f.

    Gamma_+(z) p_lam = prod_i (p_{lam_i} - 2 z^{lam_i}); the z^a part picks a
    sub-multiset T of the parts summing to a, with weight (-2)^|T|.
    """
    if a < 0:
        return SymFun()
    out: dict = {}
    for lam, v in f.items():
        for key, c in _gamma_plus_basis(a, lam).items():
            out[key] = out.get(key, 0) + c * v
    return SymFun(out)


@lru_cache(maxsize=None)
def _gamma_plus_basis(a: int, lam: Partition) -> dict:
    out: dict = {}
    n = len(lam)
    for size in range(n + 1):
        for idx in combinations(range(n), size):
            if sum(lam[i] for i in idx) != a:
                continue
            rest = Partition([lam[i] for i in range(n) if i not in idx])
            out[rest] = out.get(rest, 0) + (-2) ** size
    return out


def verify_gamma_commutation(order: int = 6, strict: bool = False) -> Report:
    """Gamma_+(z) Gamma_-(w) = Gamma_-(w) Gamma_+(z) (1 - z/w)^2, coefficientwise.

    The z^a w^-b coefficient on p_lam, for |lam| <= order and a + b <= order:
        G_a(H_b f) = H_b G_a f - 2 H_{b-1} G_{a-1} f + H_{b-2} G_{a-2} f.
    """
    report = Report()
    count = 0
    for d in range(order + 1):
        for lam in partitions(d):
            f = SymFun({lam: 1})
            for a in range(order + 1):
                for b in range(order + 1 - a):
                    lhs = gamma_plus_coefficient(a, complete(b) * f)
                    rhs = (complete(b) * gamma_plus_coefficient(a, f)
                           - complete(b - 1) * gamma_plus_coefficient(a - 1, f) * 2
                           + complete(b - 2) * gamma_plus_coefficient(a - 2, f))
                    count += 1
                    if lhs != rhs:
                        report.add(f"Gamma commutation at z^{a} w^-{b} on p{tuple(lam)}", False,
                                   lhs, rhs, witness={"a": a, "b": b, "lambda": list(lam)})
                        if strict:
                            report.raise_on_failure()
                        return report
    report.add(f"Gamma_+(z)Gamma_-(w) = Gamma_-(w)Gamma_+(z)(1-z/w)^2 to order {order}", True,
               count, count)
    return report


# --- E modes -----------------------------------------------------------------

@dataclass(frozen=True)
class ModeConvention:
    """E(z) f Omega_c = z^(zsign*(c+shift)) Gamma_-(z) Gamma_+(z) f Omega_(c+shift)."""

    shift: int = 2
    zsign: int = -1


CHOSEN = ModeConvention(2, -1)


def e_mode_apply(m: int, s: FockState, convention: ModeConvention = CHOSEN) -> FockState:
    """e_m = coefficient of z^-(m+1) in E(z)."""
    out: dict = {}
    for c, f in s.items():
        target = c + convention.shift
        acc = SymFun()
        for a in range(f.max_degree() + 1):
            d = a + m + 1 + convention.zsign * target
            if d < 0:
                continue
            g = gamma_plus_coefficient(a, f)
            if g:
                acc = acc + complete(d) * g
        if acc:
            out[target] = out[target] + acc if target in out else acc
    return FockState(out)


def e_tilde_composition(k: int, alpha: Sequence[int],
                        convention: ModeConvention = CHOSEN) -> FockState:
    """e~_{alpha_1} ... e~_{alpha_k} Omega_{-2k} with e~_a = e_{-(k-a)}."""
    s = FockState.vacuum(-2 * k)
    for a in reversed(alpha):
        s = e_mode_apply(-(k - a), s, convention)
    return s


# --- constant-term oracle ----------------------------------------------------

@lru_cache(maxsize=None)
def _schur_series(k: int, degree: int) -> MultiLaurent:
    """sum_{l(lam)<=k, |lam|=degree} a_{lam+delta}(z^-1) s_lam."""
    out = MultiLaurent(k)
    delta = _delta(k)
    for lam in partitions(degree):
        if len(lam) > k:
            continue
        padded = list(lam) + [0] * (k - len(lam))
        a = alternant([x + y for x, y in zip(padded, delta)]).inverted()
        out = out + a * schur_to_p(lam)
    return out


def e_monomial_oracle(k: int, alpha: Sequence[int]) -> SymFun:
    """[1]( z^alpha a_delta(z) sum_lam a_{lam+delta}(z^-1) s_lam ).

    Only |lam| = sum(alpha) can contribute: every other term has nonzero
    total z-degree.
    """
    if k < 1 or len(alpha) != k:
        raise InvalidArgument(f"need exactly k={k} exponents, got {list(alpha)}")
    if any(a < 0 or a > k for a in alpha):
        raise InvalidArgument(f"exponents must lie in [0, {k}], got {list(alpha)}")
    front = MultiLaurent.monomial(tuple(alpha)) * vandermonde(k)
    c = (front * _schur_series(k, sum(alpha))).constant_term()
    return c if isinstance(c, SymFun) else SymFun({Partition(): c})


def calibrate(k_max: int = 2) -> tuple[ModeConvention, Report]:
    """Select the (shift, zsign) pair that matches the oracle up to a sign per k."""
    report = Report()
    good = []
    for conv in (ModeConvention(s, z) for s in (2, -2) for z in (-1, 1)):
        ok = True
        for k in range(1, k_max + 1):
            signs = set()
            for alpha in combinations_with_replacement(range(k + 1), k):
                got = e_tilde_composition(k, alpha, conv).component(0)
                want = e_monomial_oracle(k, alpha)
                if got == want:
                    signs.add(1)
                elif got == -want and want:
                    signs.add(-1)
                else:
                    signs.add(None)
            ok = ok and len(signs) == 1 and None not in signs
        report.add(f"convention shift={conv.shift:+d} z^({conv.zsign:+d} h_0) tried",
                   True, "consistent" if ok else "inconsistent", None)
        if ok:
            good.append(conv)
    report.add("exactly one convention is consistent", len(good) == 1, len(good), 1)
    return (good[0] if len(good) == 1 else CHOSEN), report


def composed_mode_sign(k: int) -> int | None:
    """The global sign s with composed modes = s * oracle, or None if there is none."""
    signs = set()
    for alpha in combinations_with_replacement(range(k + 1), k):
        got = e_tilde_composition(k, alpha).component(0)
        want = e_monomial_oracle(k, alpha)
        if got == want:
            signs.add(1)
        elif got == -want:
            signs.add(-1)
        else:
            return None
    return signs.pop() if len(signs) == 1 else None


def theorem3_rhs(k: int, nu) -> SymFun:
    """sum_mu K_{nu mu} / prod_j r_j! * e~_mu Omega_{-2k}, computed with the oracle."""
    nu = Partition.sorted(nu)
    total = SymFun()
    for mu in partitions(nu.size, k):
        if len(mu) > k:
            continue
        kn = kostka_number(nu, mu)
        if not kn:
            continue
        padded = tuple(mu) + (0,) * (k - len(mu))
        weight = 1
        for j in set(padded):
            weight *= factorial(padded.count(j))
        total = total + e_monomial_oracle(k, padded) * Fraction(kn, weight)
    return total


def verify_theorem3(k: int, strict: bool = False, cross_check: bool = True) -> Report:
    """s_nu from the e-monomials, for every nu in the k x k box."""
    if k < 1 or k > 4:
        raise InvalidArgument(f"k must be between 1 and 4, got {k}")
    report = Report()
    box = partitions_in_box(k, k)
    ok_count = 0
    for nu in box:
        lhs, rhs = schur_to_p(nu), theorem3_rhs(k, nu)
        ok = report.add(f"k={k} s_{nu} reproduced", lhs == rhs, lhs, rhs,
                        witness={"k": k, "nu": list(nu)})
        ok_count += ok
    report.add(f"k={k} identities verified", ok_count == len(box), ok_count, len(box))
    if cross_check:
        sign = composed_mode_sign(k)
        expected = (-1) ** (k * (k - 1) // 2)
        report.add(f"k={k} composed e-modes = sign * oracle, one global sign",
                   sign is not None, sign, expected, witness={"k": k})
    if strict:
        report.raise_on_failure()
    return report


def ebasis_vectors(n: int) -> dict[tuple[int, ...], SymFun]:
    """prod_j e_{-j}^{i_j} Omega_{-2n} over i_0 + ... + i_n = n, via the oracle.

    Keys are the sorted exponent lists alpha (e_{-j} = e~_{n-j}).
    """
    return {alpha: e_monomial_oracle(n, alpha)
            for alpha in combinations_with_replacement(range(n + 1), n)}


def verify_ebasis_lemma(n: int, strict: bool = False) -> Report:
    if n < 1 or n > 4:
        raise InvalidArgument(f"n must be between 1 and 4, got {n}")
    report = Report()
    vecs = list(ebasis_vectors(n).values())
    cols = [lam for d in range(n * n + 1) for lam in partitions(d)]
    r = rank(RMatrix([[v.coeff(lam) for lam in cols] for v in vecs], len(cols)))
    report.add(f"n={n} rank = C(2n, n)", r == len(vecs) == comb(2 * n, n), r, comb(2 * n, n))
    graded = [0] * (n * n + 1)
    for v in vecs:
        graded[v.degree()] += 1
    box = [0] * (n * n + 1)
    for lam in partitions_in_box(n, n):
        box[lam.size] += 1
    report.add(f"n={n} graded dimensions match the {n}x{n} box", graded == box, graded, box)
    inside = all(Partition(lam).fits_in_box(n, n) for v in vecs for lam in schur_expansion(v))
    report.add(f"n={n} every vector lies in the span of box Schur functions", inside)
    if strict:
        report.raise_on_failure()
    return report


def verify_vandermonde(k_max: int = 4) -> Report:
    report = Report()
    for k in range(1, k_max + 1):
        a, b = vandermonde(k), vandermonde_determinant(k)
        report.add(f"k={k} product of differences = determinant", a == b, len(a._t), len(b._t))
    return report


def verify_cauchy(nvars: int = 3, order: int = 6) -> Report:
    """Gamma_-(z_k)...Gamma_-(z_1) 1 two ways, up to total z-order ``order``."""
    report = Report()
    for k in range(1, nvars + 1):
        prod = MultiLaurent.monomial((0,) * k)
        for i in range(k):
            series = MultiLaurent(k, {tuple(-d if j == i else 0 for j in range(k)): complete(d)
                                      for d in range(order + 1)})
            prod = (prod * series).truncate(order)
        cauchy = MultiLaurent(k)
        for d in range(order + 1):
            for lam in partitions(d):
                if len(lam) <= k:
                    cauchy = cauchy + power_sum_evaluation(schur_to_p(lam), k).inverted() * schur_to_p(lam)
        report.add(f"Cauchy identity in {k} variable(s) to order {order}", prod == cauchy)
    return report


def oracle_is_symmetric(k: int, alpha: Sequence[int]) -> bool:
    base = e_monomial_oracle(k, alpha)
    return all(e_monomial_oracle(k, p) == base for p in set(permutations(alpha)))

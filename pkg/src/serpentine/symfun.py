"""Symmetric functions over Q in the power-sum basis.

``SymFun`` is a finite linear combination of products ``p_lambda`` of
Newton power sums.  Schur, complete and elementary functions are produced
as conversions into this basis; nothing else is stored.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import InvalidArgument
from .qpoly import QPoly
from .tableaux import charge, enumerate_two_row_tableaux, maj


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((x for x in parts if x), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for x in self:
            m[x] = m.get(x, 0) + 1
        return m

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def dominated_by(self, other: "Partition") -> bool:
        """True iff self <= other in dominance order (sizes must agree)."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a > b:
                return False
        return True

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for p in rec(n, max_part):
        yield Partition(p)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    return [lam for n in range(rows * cols + 1) for lam in partitions(n, cols) if len(lam) <= rows]


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    out = 1
    for i, m in Partition(lam).multiplicities().items():
        out *= i ** m * factorial(m)
    return out


class SymFun:
    """Element of Lambda_Q, stored as {Partition: Fraction} over p_lambda."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | None = None):
        c = {}
        for lam, v in (coeffs or {}).items():
            v = Fraction(v)
            if v:
                lam = lam if isinstance(lam, Partition) else Partition.sorted(lam)
                c[lam] = c.get(lam, Fraction(0)) + v
                if not c[lam]:
                    del c[lam]
        self._c = c

    @classmethod
    def one(cls) -> "SymFun":
        return cls({Partition(): 1})

    @classmethod
    def p(cls, *parts: int) -> "SymFun":
        return cls({Partition.sorted(parts): 1})

    @classmethod
    def _raw(cls, c: dict) -> "SymFun":
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (kv[0].size, tuple(kv[0])))

    def coeff(self, lam) -> Fraction:
        return self._c.get(Partition.sorted(lam), Fraction(0))

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFun({Partition(): other})
        if not isinstance(other, SymFun):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFun({Partition(): other})
        c = dict(self._c)
        for lam, v in other._c.items():
            s = c.get(lam, 0) + v
            if s:
                c[lam] = s
            else:
                c.pop(lam, None)
        return SymFun._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return SymFun._raw({lam: -v for lam, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SymFun()
            return SymFun._raw({lam: v * other for lam, v in self._c.items()})
        if not isinstance(other, SymFun):
            return NotImplemented
        c: dict = {}
        for l1, v1 in self._c.items():
            for l2, v2 in other._c.items():
                lam = Partition.sorted(l1 + l2)
                c[lam] = c.get(lam, 0) + v1 * v2
        return SymFun({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k: int):
        out = SymFun.one()
        for _ in range(k):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {lam.size for lam in self._c}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Common degree of all terms; None for zero; error if inhomogeneous."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise InvalidArgument(f"not homogeneous: degrees {sorted(ds)}")
        return ds.pop()

    def max_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def truncate(self, max_degree: int) -> "SymFun":
        return SymFun._raw({lam: v for lam, v in self._c.items() if lam.size <= max_degree})

    def derivative(self, j: int) -> "SymFun":
        """d/dp_j."""
        c: dict = {}
        for lam, v in self._c.items():
            m = lam.count(j)
            if m:
                rest = list(lam)
                rest.remove(j)
                key = Partition(rest)
                c[key] = c.get(key, 0) + v * m
        return SymFun({k: v for k, v in c.items() if v})

    def to_pairs(self) -> list[list]:
        return [[list(lam), _frac_str(v)] for lam, v in self.items()]

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for lam, v in self.items():
            mono = "*".join(
                f"p{i}" + (f"^{m}" if m > 1 else "")
                for i, m in sorted(lam.multiplicities().items())
            )
            if not mono:
                terms.append(str(v))
            elif v == 1:
                terms.append(mono)
            elif v == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def inner_product(f: SymFun, g: SymFun) -> Fraction:
    """<p_lam, p_mu> = delta * z_lam * 2**l(lam)."""
    total = Fraction(0)
    for lam, v in f._c.items():
        w = g._c.get(lam)
        if w:
            total += v * w * z_lambda(lam) * 2 ** len(lam)
    return total


def hall_inner_product(f: SymFun, g: SymFun) -> Fraction:
    """The standard pairing <p_lam, p_mu> = delta * z_lam (Schur functions orthonormal)."""
    total = Fraction(0)
    for lam, v in f._c.items():
        w = g._c.get(lam)
        if w:
            total += v * w * z_lambda(lam)
    return total


@lru_cache(maxsize=None)
def complete(n: int) -> SymFun:
    """h_n = sum_{mu |- n} p_mu / z_mu."""
    if n < 0:
        return SymFun()
    return SymFun({mu: Fraction(1, z_lambda(mu)) for mu in partitions(n)})


@lru_cache(maxsize=None)
def elementary(n: int) -> SymFun:
    """e_n = sum_{mu |- n} (-1)^(n - l(mu)) p_mu / z_mu."""
    if n < 0:
        return SymFun()
    return SymFun({mu: Fraction((-1) ** (n - len(mu)), z_lambda(mu)) for mu in partitions(n)})


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _jacobi_trudi(lam: Partition, entry) -> SymFun:
    k = len(lam)
    total = SymFun()
    for perm in permutations(range(k)):
        term = SymFun.one()
        for i in range(k):
            idx = lam[i] - i + perm[i]
            if idx < 0:
                term = None
                break
            term = term * entry(idx)
        if term is not None:
            total = total + term * _perm_sign(perm)
    return total


@lru_cache(maxsize=None)
def schur_to_p(lam) -> SymFun:
    """Schur function s_lam in the power-sum basis.

    Jacobi-Trudi det[h_{lam_i - i + j}], or the dual form in e's over the
    conjugate when that determinant is smaller.
    """
    lam = Partition(lam)
    if not lam:
        return SymFun.one()
    conj = lam.conjugate()
    if len(conj) < len(lam):
        return _jacobi_trudi(conj, elementary)
    return _jacobi_trudi(lam, complete)


def schur_expansion(f: SymFun) -> dict[Partition, Fraction]:
    """Coefficients of f in the Schur basis, via the Hall pairing."""
    out = {}
    for d in sorted(f.degrees()):
        fd = SymFun({lam: v for lam, v in f.items() if lam.size == d})
        for lam in partitions(d):
            c = hall_inner_product(fd, schur_to_p(lam))
            if c:
                out[lam] = c
    return out


def kostka_number(nu, mu) -> int:
    """Number of semistandard tableaux of shape nu and content mu (backtracking)."""
    nu, mu = Partition.sorted(nu), tuple(x for x in mu if x)
    if nu.size != sum(mu):
        raise InvalidArgument(f"size mismatch: |{nu}| != |{mu}|")
    return _kostka(tuple(nu), tuple(mu))


@lru_cache(maxsize=None)
def _kostka(nu: tuple, mu: tuple) -> int:
    # Fill the letters of mu one value at a time as a horizontal strip,
    # peeling the largest letter off nu.
    if not mu:
        return 1 if not nu else 0
    count = mu[-1]
    rest = mu[:-1]
    total = 0
    for inner in _horizontal_strips_removed(nu, count):
        total += _kostka(inner, rest)
    return total


def _horizontal_strips_removed(nu: tuple, count: int) -> Iterator[tuple]:
    """Shapes kappa subset nu with nu/kappa a horizontal strip of size count."""
    n = len(nu)
    parts = list(nu)

    def rec(i, left):
        if i == n:
            if left == 0:
                yield tuple(x for x in parts if x)
            return
        lower = nu[i + 1] if i + 1 < n else 0
        for take in range(min(left, nu[i] - lower), -1, -1):
            parts[i] = nu[i] - take
            yield from rec(i + 1, left - take)
        parts[i] = nu[i]

    yield from rec(0, count)


def _two_row(lam) -> Partition:
    lam = Partition.sorted(lam)
    if len(lam) > 2:
        raise InvalidArgument(f"{lam} has more than two rows; only two-row shapes are supported")
    return lam


def kostka_foulkes_standard(lam) -> QPoly:
    """K_{lam, 1^N}(q) as the charge generating polynomial over SYT of shape lam."""
    lam = _two_row(lam)
    return QPoly.from_exponents(charge(t) for t in enumerate_two_row_tableaux(lam.size, lam))


def maj_qcharacter(lam) -> QPoly:
    lam = _two_row(lam)
    return QPoly.from_exponents(maj(t) for t in enumerate_two_row_tableaux(lam.size, lam))


def kedem_transform(lam) -> QPoly:
    """q^{N(N-1)/2} K_{lam,1^N}(1/q)."""
    lam = _two_row(lam)
    n = lam.size
    return kostka_foulkes_standard(lam).invert().shift(n * (n - 1) // 2)

"""Exact rational linear algebra: rank, incremental span bases, submatrices.

Everything here works over Q with :class:`fractions.Fraction`.  The
``ModpSpan`` class at the bottom is a numpy accelerator for the same
span-growth computation modulo a prime; it only ever gives lower bounds on
ranks over Q and is checked against the exact path in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgument

Vector = Sequence


def _bits(x: Fraction) -> int:
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


class RMatrix:
    """Exact rational matrix, rows stored sparsely as {column: Fraction}."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence] = (), ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InvalidArgument("ragged rows")
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in rows]

    @classmethod
    def from_sparse(cls, nrows: int, ncols: int, rows: Sequence[dict]) -> "RMatrix":
        m = cls((), ncols)
        m.nrows = nrows
        m._rows = [{j: Fraction(v) for j, v in r.items() if v} for r in rows]
        if len(m._rows) != nrows or any(j < 0 or j >= ncols for r in m._rows for j in r):
            raise InvalidArgument("sparse rows out of range")
        return m

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i].get(j, Fraction(0))

    def row(self, i: int) -> list[Fraction]:
        r = self._rows[i]
        return [r.get(j, Fraction(0)) for j in range(self.ncols)]

    def to_lists(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "RMatrix":
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return RMatrix.from_sparse(self.ncols, self.nrows, cols)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == (other.nrows, other.ncols, other._rows)

    def __repr__(self):
        return f"RMatrix({self.nrows}x{self.ncols})"


def rank(m: RMatrix) -> int:
    """Rank over Q by Gaussian elimination.

    In each column the pivot is the candidate row whose pivot entry has the
    smallest numerator+denominator bit length.
    """
    rows = [dict(r) for r in m._rows if r]
    r = 0
    for col in range(m.ncols):
        cands = [i for i in range(r, len(rows)) if col in rows[i]]
        if not cands:
            continue
        best = min(cands, key=lambda i: _bits(rows[i][col]))
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r]
        pv = piv[col]
        for i in range(r + 1, len(rows)):
            v = rows[i].get(col)
            if v is None:
                continue
            f = v / pv
            row = rows[i]
            for j, x in piv.items():
                y = row.get(j, 0) - f * x
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
        r += 1
        if r == len(rows):
            break
    return r


def block_restrict(m: RMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> RMatrix:
    if any(i < 0 or i >= m.nrows for i in row_idx) or any(j < 0 or j >= m.ncols for j in col_idx):
        raise InvalidArgument("index out of range")
    return RMatrix([[m[i, j] for j in col_idx] for i in row_idx], len(col_idx))


@dataclass
class SpanBasis:
    """Reduced row-echelon basis of a subspace of Q^dim.

    ``rows[i]`` has a 1 in column ``pivots[i]`` and zeros in every other
    pivot column.  Pivots are kept sorted.
    """

    dim: int
    rows: list[dict] = field(default_factory=list)
    pivots: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def copy(self) -> "SpanBasis":
        return SpanBasis(self.dim, [dict(r) for r in self.rows], list(self.pivots))

    def reduce(self, v) -> dict:
        """Residue of v modulo the span, as a sparse dict."""
        if isinstance(v, dict):
            w = {j: Fraction(x) for j, x in v.items() if x}
            if any(j < 0 or j >= self.dim for j in w):
                raise InvalidArgument("vector index out of range")
        else:
            if len(v) != self.dim:
                raise InvalidArgument(f"vector has length {len(v)}, expected {self.dim}")
            w = {j: Fraction(x) for j, x in enumerate(v) if x}
        for p, row in zip(self.pivots, self.rows):
            c = w.get(p)
            if c:
                for j, x in row.items():
                    y = w.get(j, 0) - c * x
                    if y:
                        w[j] = y
                    else:
                        w.pop(j, None)
        return w

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def add_reduced(self, w: dict) -> None:
        """Insert a nonzero residue returned by :meth:`reduce`."""
        p = min(w)
        inv = 1 / w[p]
        w = {j: x * inv for j, x in w.items()}
        for row in self.rows:
            c = row.get(p)
            if c:
                for j, x in w.items():
                    y = row.get(j, 0) - c * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < p:
            pos += 1
        self.pivots.insert(pos, p)
        self.rows.insert(pos, w)

    def to_matrix(self) -> RMatrix:
        return RMatrix.from_sparse(len(self.rows), self.dim, self.rows)


def span_extend(s: SpanBasis, v) -> tuple[SpanBasis, bool]:
    """Return (basis of span(s, v), whether the span grew).  ``s`` is not modified."""
    w = s.reduce(v)
    if not w:
        return s, False
    out = s.copy()
    out.add_reduced(w)
    return out, True


# Primes below 2**26.  Residues are split into 13-bit limbs for the
# matrix products, so every partial product is < 2**39 and sums over an inner
# dimension <= 2**14 stay exact in float64.
DEFAULT_PRIMES = (67108859, 67108837)


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    hi, lo = np.divmod(a, 1 << 13)
    bf = b.astype(np.float64)
    top = (hi.astype(np.float64) @ bf).astype(np.int64) % p
    bottom = (lo.astype(np.float64) @ bf).astype(np.int64) % p
    return ((top << 13) + bottom) % p


class ModpSpan:
    """Row-reduced span basis over GF(p) for batches of integer vectors."""

    def __init__(self, dim: int, prime: int = DEFAULT_PRIMES[0]):
        if dim > 2048:
            raise InvalidArgument("ModpSpan supports dim <= 2048")
        self.dim = dim
        self.p = prime
        self.basis = np.zeros((0, dim), dtype=np.int64)
        self.pivots = np.zeros(0, dtype=np.int64)

    def __len__(self):
        return self.basis.shape[0]

    def add_batch(self, vecs: np.ndarray) -> np.ndarray:
        """Add the rows of ``vecs`` (entries already reduced mod p).

        Returns the indices of the rows that enlarged the span, in a greedy
        left-to-right order.
        """
        p = self.p
        c = np.array(vecs, dtype=np.int64) % p
        if c.size == 0:
            return np.zeros(0, dtype=np.int64)
        if len(self.pivots):
            c = (c - _matmul_mod(c[:, self.pivots], self.basis, p)) % p
        grew = []
        cap = min(c.shape[0], self.dim - len(self.pivots))
        rows = np.zeros((cap, self.dim), dtype=np.int64)
        piv = np.zeros(cap, dtype=np.int64)
        k = 0
        for i in range(c.shape[0]):
            if k == cap:
                break
            v = c[i]
            if k:
                v = (v - _matmul_mod(v[piv[:k]][None, :], rows[:k], p)[0]) % p
            nz = np.flatnonzero(v)
            if nz.size == 0:
                continue
            pv = int(nz[0])
            v = (v * pow(int(v[pv]), p - 2, p)) % p
            if k:
                rows[:k] = (rows[:k] - np.outer(rows[:k, pv], v) % p) % p
            rows[k] = v
            piv[k] = pv
            k += 1
            grew.append(i)
        if k:
            rows, piv = rows[:k], piv[:k]
            if len(self.pivots):
                self.basis = (self.basis - _matmul_mod(self.basis[:, piv], rows, p)) % p
            self.basis = np.vstack([self.basis, rows])
            self.pivots = np.concatenate([self.pivots, piv])
        return np.array(grew, dtype=np.int64)


def rank_mod_p(m: RMatrix | Sequence[Sequence[int]], prime: int = DEFAULT_PRIMES[0]) -> int:
    """Rank of an integer matrix over GF(prime); never exceeds the rank over Q."""
    rows = m.to_lists() if isinstance(m, RMatrix) else [list(r) for r in m]
    if not rows:
        return 0
    if any(Fraction(x).denominator != 1 for r in rows for x in r):
        raise InvalidArgument("rank_mod_p needs integer entries")
    arr = np.array([[int(x) % prime for x in r] for r in rows], dtype=np.int64)
    s = ModpSpan(arr.shape[1], prime)
    s.add_batch(arr)
    return len(s)

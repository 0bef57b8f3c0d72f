"""Fusion filtration on (C^2)^{(x)N} and its graded sl2-multiplicities.

The evaluation module has basis the subsets S of {0..N-1} (bitmasks); a
set bit means that tensor factor is raised.  ``e_j = sum_i z_i^j E^(i)``.

The filtration piece V^(<=m) is the span of all e-monomials of total
t-degree <= m applied to the lowest vector.  Because every e_j raises the
number of set bits by one, the weight-(w+1) part satisfies

    V^(<=m)_{w+1} = sum_j e_j V^(<=m-j)_w,

so each weight block is grown grade by grade from the previous one.  For
j >= N, e_j is a constant-coefficient combination of e_0..e_{N-1}, so those
indices never contribute anything new.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .errors import InvalidArgument, VerificationFailure
from .linalg import DEFAULT_PRIMES, ModpSpan, SpanBasis
from .qpoly import QPoly
from .report import Report
from .symfun import kedem_transform, maj_qcharacter
from .tableaux import ballot_number

EXACT_MAX_N = 8


@dataclass(frozen=True)
class EvalModule:
    n: int
    z: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.z) != self.n:
            raise InvalidArgument("need one evaluation point per tensor factor")
        if len(set(self.z)) != self.n:
            raise InvalidArgument(f"evaluation points must be pairwise distinct, got {self.z}")

    @property
    def dim(self) -> int:
        return 1 << self.n

    @cached_property
    def blocks(self) -> list[list[int]]:
        """Bitmasks of each popcount, in increasing order."""
        out = [[] for _ in range(self.n + 1)]
        for s in range(self.dim):
            out[bin(s).count("1")].append(s)
        return out

    @cached_property
    def block_index(self) -> list[dict[int, int]]:
        return [{s: i for i, s in enumerate(b)} for b in self.blocks]

    def raise_table(self, w: int) -> tuple[np.ndarray, np.ndarray]:
        """For block w+1: (source index in block w, factor i) for each set bit.

        Both arrays have shape (C(N, w+1), w+1).
        """
        src_idx = self.block_index[w]
        tgt = self.blocks[w + 1]
        src = np.zeros((len(tgt), w + 1), dtype=np.int64)
        fac = np.zeros((len(tgt), w + 1), dtype=np.int64)
        for t, s in enumerate(tgt):
            bits = [i for i in range(self.n) if s >> i & 1]
            for c, i in enumerate(bits):
                src[t, c] = src_idx[s & ~(1 << i)]
                fac[t, c] = i
        return src, fac

    # Full-space operators, vectors as {bitmask: coefficient}.

    def apply_e(self, j: int, v: dict) -> dict:
        out: dict = {}
        for s, c in v.items():
            for i in range(self.n):
                if not s >> i & 1:
                    t = s | (1 << i)
                    out[t] = out.get(t, 0) + c * self.z[i] ** j
        return {s: c for s, c in out.items() if c}

    def apply_global(self, op: str, v: dict) -> dict:
        """Global sl2 generator ``op`` in {'e', 'f', 'h'} (sum over factors)."""
        out: dict = {}
        for s, c in v.items():
            if op == "h":
                out[s] = out.get(s, 0) + c * (2 * bin(s).count("1") - self.n)
                continue
            for i in range(self.n):
                bit = s >> i & 1
                if op == "e" and not bit:
                    t = s | (1 << i)
                elif op == "f" and bit:
                    t = s & ~(1 << i)
                else:
                    continue
                out[t] = out.get(t, 0) + c
        return {s: c for s, c in out.items() if c}


def build_eval_module(n: int, z: Sequence | None = None) -> EvalModule:
    if n < 2 or n % 2:
        raise InvalidArgument(f"N must be even and >= 2, got {n}")
    if z is None:
        z = range(1, n + 1)
    return EvalModule(n, tuple(Fraction(x) for x in z))


def z_points(n: int, choice: str = "consecutive") -> tuple[int, ...]:
    if choice == "consecutive":
        return tuple(range(1, n + 1))
    if choice == "shifted":
        return tuple(range(n + 1, 2 * n + 1))
    raise InvalidArgument(f"unknown z choice {choice!r}")


@dataclass
class GradedMultiplicities:
    """ch_q M_k for k = 0..n, plus the per-block graded dimensions."""

    n_factors: int
    characters: dict[int, QPoly]
    block_dims: dict[int, dict[int, int]] = field(default_factory=dict, repr=False)

    def total_dimension(self) -> int:
        return sum((2 * k + 1) * ch.at_one() for k, ch in self.characters.items())


def _to_mod(x: Fraction, p: int) -> int:
    return x.numerator % p * pow(x.denominator % p, p - 2, p) % p


def _grow_blocks_exact(m: EvalModule, top: int) -> dict[int, dict[int, int]]:
    n = m.n
    dims = {0: {0: 1}}
    layers = {0: [[Fraction(1)]]}  # grade -> new (unreduced) vectors of the current block
    zpow = [[zi ** j for zi in m.z] for j in range(n)]
    for w in range(top):
        src, fac = m.raise_table(w)
        size = comb(n, w + 1)
        span = SpanBasis(size)
        new_layers: dict[int, list] = {}
        grade = 0
        last = max(layers) + n - 1
        while len(span) < size:
            if grade > last:
                raise VerificationFailure("weight block did not fill up", {"N": n, "block": w + 1})
            added = []
            for j in range(n):
                for b in layers.get(grade - j, ()):
                    zj = zpow[j]
                    v = [sum(zj[fac[t, c]] * b[src[t, c]] for c in range(w + 1)) for t in range(size)]
                    r = span.reduce(v)
                    if r:
                        span.add_reduced(r)
                        added.append(v)
                        if len(span) == size:
                            break
                if len(span) == size:
                    break
            if added:
                new_layers[grade] = added
            grade += 1
        layers = new_layers
        dims[w + 1] = {g: len(vs) for g, vs in new_layers.items()}
    return dims


def _grow_blocks_modp(m: EvalModule, top: int, prime: int) -> dict[int, dict[int, int]]:
    n = m.n
    dims = {0: {0: 1}}
    layers = {0: np.ones((1, 1), dtype=np.int64)}
    zmod = [_to_mod(x, prime) for x in m.z]
    zpow = np.array([[pow(zi, j, prime) for zi in zmod] for j in range(n)], dtype=np.int64)
    for w in range(top):
        src, fac = m.raise_table(w)
        size = comb(n, w + 1)
        span = ModpSpan(size, prime)
        new_layers = {}
        grade = 0
        last = max(layers) + n - 1
        while len(span) < size:
            if grade > last:
                raise VerificationFailure("weight block did not fill up", {"N": n, "block": w + 1})
            batch = []
            for j in range(n):
                b = layers.get(grade - j)
                if b is None:
                    continue
                # (rows, targets, w+1) gathered then summed over set bits
                batch.append((b[:, src] * zpow[j][fac]).sum(axis=2) % prime)
            if batch:
                cand = np.vstack(batch)
                grew = span.add_batch(cand)
                if len(grew):
                    new_layers[grade] = cand[grew]
            grade += 1
        layers = new_layers
        dims[w + 1] = {g: len(v) for g, v in new_layers.items()}
    return dims


def _block_dims(m: EvalModule, method: str, full: bool) -> dict[int, dict[int, int]]:
    top = m.n if full else m.n // 2
    if method == "auto":
        method = "exact" if m.n <= EXACT_MAX_N else "modular"
    if method == "exact":
        return _grow_blocks_exact(m, top)
    if method == "modular":
        results = [_grow_blocks_modp(m, top, p) for p in DEFAULT_PRIMES]
        if any(r != results[0] for r in results[1:]):
            raise VerificationFailure("modular ranks disagree between primes", {"N": m.n})
        return results[0]
    raise InvalidArgument(f"unknown method {method!r}")


def filtration_dims(m: EvalModule, method: str = "auto") -> list[int]:
    """dim V^(<=m) for m = 0, 1, ... up to the grade where it reaches 2^N."""
    dims = _block_dims(m, method, full=True)
    top = max(g for d in dims.values() for g in d)
    per_grade = [sum(d.get(g, 0) for d in dims.values()) for g in range(top + 1)]
    out, acc = [], 0
    for x in per_grade:
        acc += x
        out.append(acc)
    return out


def graded_multiplicities(m: EvalModule, method: str = "auto", full: bool = False) -> GradedMultiplicities:
    """ch_q M_k from lowest-weight counting in each grade.

    A grade piece is an sl2-module, so dim M_k[i] equals the dimension of its
    weight -2k space minus that of its weight -2k-2 space, i.e. of the blocks
    with n-k and n-k-1 raised factors.  ``full=True`` also computes the upper
    blocks and checks the weight symmetry of every grade piece.
    """
    dims = _block_dims(m, method, full)
    n = m.n // 2
    if full:
        for w in range(m.n + 1):
            if dims[w] != dims[m.n - w]:
                raise VerificationFailure("grade pieces are not sl2-symmetric", {"block": w})
    chars = {}
    for k in range(n + 1):
        lo = dims.get(n - k, {})
        below = dims.get(n - k - 1, {})
        chars[k] = QPoly({g: lo.get(g, 0) - below.get(g, 0) for g in set(lo) | set(below)})
    return GradedMultiplicities(m.n, chars, dims)


def shape_for(n_factors: int, k: int) -> tuple[int, ...]:
    n = n_factors // 2
    return tuple(x for x in (n + k, n - k) if x)


def verify_kedem(n_factors: int, z: Sequence | None = None, method: str = "auto",
                 strict: bool = False) -> Report:
    """Fusion character = Kostka-Foulkes transform = maj generating polynomial, every k."""
    report = Report()
    m = build_eval_module(n_factors, z)
    gm = graded_multiplicities(m, method)
    n = n_factors // 2
    for k in range(n + 1):
        shape = shape_for(n_factors, k)
        fusion = gm.characters[k]
        kf = kedem_transform(shape)
        mj = maj_qcharacter(shape)
        report.add(f"N={n_factors} k={k} fusion == KF transform", fusion == kf, fusion, kf,
                   witness={"N": n_factors, "k": k})
        report.add(f"N={n_factors} k={k} KF transform == maj", kf == mj, kf, mj,
                   witness={"N": n_factors, "k": k})
    total = gm.total_dimension()
    report.add(f"N={n_factors} sum (2k+1) ch M_k(1) == 2^N", total == 2 ** n_factors, total, 2 ** n_factors)
    top = max(ch.degree() for ch in gm.characters.values())
    report.add(f"N={n_factors} top grade == n^2", top == n * n, top, n * n)
    if strict:
        report.raise_on_failure()
    return report


def swfin_identity(n_factors: int) -> tuple[int, int]:
    """(sum_k (2k+1) #SYT(n+k, n-k), 2^N)."""
    n = n_factors // 2
    return sum((2 * k + 1) * ballot_number(n + k, n - k) for k in range(n + 1)), 2 ** n_factors

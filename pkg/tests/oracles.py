"""Independent reference implementations used only by the tests.

None of these share code paths with the package beyond the value types
(Partition, SymFun, QPoly) and the exact rank routine, which has its own
tests.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from serpentine.linalg import RMatrix, rank
from serpentine.qpoly import QPoly
from serpentine.symfun import Partition, SymFun, partitions, z_lambda


# --- tableaux ------------------------------------------------------------------

def syt_by_fillings(shape):
    """Standard fillings of ``shape`` found by trying every permutation."""
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, pos = [], 0
        for length in shape:
            rows.append(perm[pos:pos + length])
            pos += length
        if any(r[i] >= r[i + 1] for r in rows for i in range(len(r) - 1)):
            continue
        if any(rows[i + 1][j] <= rows[i][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1]))):
            continue
        out.append(tuple(tuple(r) for r in rows))
    return out


def row_of(rows, x):
    return next(i for i, r in enumerate(rows) if x in r)


def maj_direct(rows):
    n = sum(len(r) for r in rows)
    return sum(i for i in range(1, n) if row_of(rows, i + 1) > row_of(rows, i))


def ls_charge(rows):
    """Lascoux-Schutzenberger charge of a standard tableau via its reading word.

    Reading word: rows from bottom to top.  Letter 1 has index 0; letter i+1
    gets index(i) + 1 if it appears to the right of i, else index(i).
    """
    word = [x for r in reversed(rows) for x in r]
    where = {x: i for i, x in enumerate(word)}
    idx, total = 0, 0
    for i in range(1, len(word)):
        if where[i + 1] > where[i]:
            idx += 1
        total += idx
    return total


def kostka_foulkes_ls(shape) -> QPoly:
    return QPoly.from_exponents(ls_charge(t) for t in syt_by_fillings(shape))


def ssyt_count(nu, mu) -> int:
    cells = [(i, j) for i, length in enumerate(nu) for j in range(length)]
    values = range(1, len(mu) + 1)
    count = 0
    for fill in product(values, repeat=len(cells)):
        t = dict(zip(cells, fill))
        if any(fill.count(v) != mu[v - 1] for v in values):
            continue
        if any((i, j + 1) in t and t[i, j] > t[i, j + 1] for i, j in cells):
            continue
        if any((i + 1, j) in t and t[i, j] >= t[i + 1, j] for i, j in cells):
            continue
        count += 1
    return count


# --- symmetric functions -------------------------------------------------------

def mn_character(lam, mu) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama rule on beta-sets."""
    lam = list(lam)
    if not mu:
        return 1 if sum(lam) == 0 else 0
    k = len(lam)
    beta = {lam[i] + k - 1 - i for i in range(k)}
    r, rest = mu[0], mu[1:]
    total = 0
    for b in sorted(beta):
        if b - r >= 0 and b - r not in beta:
            sign = (-1) ** sum(1 for x in beta if b - r < x < b)
            nb = sorted((beta - {b}) | {b - r}, reverse=True)
            new = [nb[i] - (k - 1 - i) for i in range(k)]
            total += sign * mn_character(new, rest)
    return total


def schur_by_characters(lam) -> SymFun:
    n = sum(lam)
    return SymFun({mu: Fraction(mn_character(lam, tuple(mu)), z_lambda(mu)) for mu in partitions(n)})


# --- fusion ----------------------------------------------------------------------

def fusion_block_dims_bruteforce(n, z, extra_modes=2):
    """d_w(m) = dim span{e_{i_1}...e_{i_w} v0 : sum i <= m} for every block w.

    Works in the full 2^N space with every e_j, j < N + extra_modes, and
    every multiset of indices up to the top grade n^2.
    """
    z = [Fraction(x) for x in z]
    top = (n // 2) ** 2
    modes = range(n + extra_modes)
    out = {}

    def apply(j, v):
        res = {}
        for s, c in v.items():
            for i in range(n):
                if not s >> i & 1:
                    t = s | 1 << i
                    res[t] = res.get(t, 0) + c * z[i] ** j
        return res

    for w in range(n + 1):
        vecs = []
        for idx in combinations_with_replacement(modes, w):
            g = sum(idx)
            if g > top + n:
                continue
            v = {0: Fraction(1)}
            for j in idx:
                v = apply(j, v)
            vecs.append((g, v))
        dims = {}
        for m in range(top + 1):
            rows = [v for g, v in vecs if g <= m]
            dims[m] = rank(RMatrix.from_sparse(len(rows), 1 << n, rows)) if rows else 0
        out[w] = dims
    return out


def fusion_characters_bruteforce(n, z):
    dims = fusion_block_dims_bruteforce(n, z)
    half = n // 2
    top = half * half

    def grade(w, m):
        if w < 0:
            return 0
        return dims[w][m] - (dims[w][m - 1] if m else 0)

    chars = {}
    for k in range(half + 1):
        chars[k] = QPoly({m: grade(half - k, m) - grade(half - k - 1, m) for m in range(top + 1)})
    cumulative = [sum(dims[w][m] for w in dims) for m in range(top + 1)]
    return chars, cumulative


# --- Fock space ------------------------------------------------------------------

def d_dp(f: SymFun, j: int) -> SymFun:
    return f.derivative(j)


def virasoro_differential(n: int, f: SymFun, c: int) -> SymFun:
    """L_n written as a differential operator in the p_j on charge c."""
    p = SymFun.p
    deg = f.max_degree() + abs(n) + 1
    out = SymFun()
    if n == 0:
        out = f * Fraction(c * c, 4)
        for j in range(1, deg + 1):
            out = out + p(j) * d_dp(f, j) * j
        return out
    if n > 0:
        for a in range(1, n):
            out = out + d_dp(d_dp(f, a), n - a) * (a * (n - a))
        for j in range(1, deg + 1):
            out = out + p(j) * d_dp(f, j + n) * (j + n)
        return out + d_dp(f, n) * (c * n)
    m = -n
    for a in range(1, m):
        out = out + p(a, m - a) * f * Fraction(1, 4)
    for i in range(1, deg + 1):
        out = out + p(i + m) * d_dp(f, i) * i
    return out + p(m) * f * Fraction(c, 2)


def gamma_plus_by_derivatives(f: SymFun, max_power: int) -> dict[int, SymFun]:
    """Coefficients of exp(-2 sum_j z^j d/dp_j) f, by summing D^k f / k!."""
    term = {0: f}
    total = {0: f}
    k = 0
    while term:
        k += 1
        new: dict[int, SymFun] = {}
        for e, g in term.items():
            for j in range(1, max_power + 1):
                if e + j > max_power:
                    break
                h = g.derivative(j) * Fraction(-2, k)
                if h:
                    new[e + j] = new.get(e + j, SymFun()) + h
        term = {e: g for e, g in new.items() if g}
        for e, g in term.items():
            total[e] = total.get(e, SymFun()) + g
    return {e: g for e, g in total.items() if g}


def det(mat):
    """Determinant by Leibniz expansion (small matrices only)."""
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= mat[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def factorial_product(xs) -> int:
    out = 1
    for x in xs:
        out *= factorial(x)
    return out

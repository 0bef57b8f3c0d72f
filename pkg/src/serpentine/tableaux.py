"""Two-row standard Young tableaux, serpentine tableaux and their statistics.

A two-row standard tableau on ``1..N`` is stored as its two rows.  The
serpentine (infinite) tableaux are represented by a finite base tableau of
even size; the tail beyond the base is implied: at every even level ``L``
the entry ``L+1`` goes to the first row and ``L+2`` to the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import InvalidArgument
from .qpoly import QPoly

MAX_CELLS = 64


@dataclass(frozen=True, order=True)
class TwoRowTableau:
    row1: tuple[int, ...] = ()
    row2: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))
        r1, r2 = self.row1, self.row2
        n = len(r1) + len(r2)
        if n > MAX_CELLS:
            raise InvalidArgument(f"tableau has {n} cells, limit is {MAX_CELLS}")
        if sorted(r1 + r2) != list(range(1, n + 1)):
            raise InvalidArgument(f"rows {r1}, {r2} do not partition 1..{n}")
        if len(r1) < len(r2):
            raise InvalidArgument("second row longer than first row")
        if any(a >= b for a, b in zip(r1, r1[1:])) or any(a >= b for a, b in zip(r2, r2[1:])):
            raise InvalidArgument("rows must be strictly increasing")
        if any(r2[j] <= r1[j] for j in range(len(r2))):
            raise InvalidArgument("columns must be strictly increasing")

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "TwoRowTableau":
        """Build from the row word: ``word[i-1]`` is the row (1 or 2) of entry i."""
        r1, r2 = [], []
        for i, row in enumerate(word, start=1):
            (r1 if row == 1 else r2).append(i)
        return cls(tuple(r1), tuple(r2))

    @property
    def size(self) -> int:
        return len(self.row1) + len(self.row2)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(x for x in (len(self.row1), len(self.row2)) if x)

    def word(self) -> tuple[int, ...]:
        w = [1] * self.size
        for x in self.row2:
            w[x - 1] = 2
        return tuple(w)

    def position(self, entry: int) -> tuple[int, int]:
        """(row, column) of ``entry``, both 0-based."""
        if entry in self.row1:
            return 0, self.row1.index(entry)
        return 1, self.row2.index(entry)

    def __str__(self):
        top = " ".join(map(str, self.row1))
        return f"[{top} / {' '.join(map(str, self.row2))}]" if self.row2 else f"[{top}]"


def two_row_shapes(n: int) -> list[tuple[int, ...]]:
    return [tuple(x for x in (n - b, b) if x) for b in range(n // 2 + 1)]


def _check_shape(n: int, shape) -> tuple[int, int]:
    shape = tuple(shape)
    if len(shape) > 2 or sum(shape) != n or any(x <= 0 for x in shape):
        raise InvalidArgument(f"{shape} is not a partition of {n} with at most two rows")
    if len(shape) == 2 and shape[0] < shape[1]:
        raise InvalidArgument(f"{shape} is not weakly decreasing")
    return shape[0] if shape else 0, shape[1] if len(shape) == 2 else 0


def _words(a: int, b: int) -> Iterator[tuple[int, ...]]:
    """Ballot words with ``a`` ones and ``b`` twos, lexicographic order."""
    word: list[int] = []

    def rec(ones, twos):
        if ones == a and twos == b:
            yield tuple(word)
            return
        if ones < a:
            word.append(1)
            yield from rec(ones + 1, twos)
            word.pop()
        if twos < b and twos < ones:
            word.append(2)
            yield from rec(ones, twos + 1)
            word.pop()

    yield from rec(0, 0)


def enumerate_two_row_tableaux(n: int, shape=None) -> list[TwoRowTableau]:
    """All standard tableaux with ``n`` cells and at most two rows.

    With ``shape`` given, only that shape.  ``n == 0`` yields the empty tableau.
    """
    if n < 0 or n > MAX_CELLS:
        raise InvalidArgument(f"n={n} out of range")
    if shape is not None:
        shapes = [_check_shape(n, shape)]
    else:
        shapes = [(n - b, b) for b in range(n // 2 + 1)]
    out = []
    for a, b in shapes:
        out.extend(TwoRowTableau.from_word(w) for w in _words(a, b))
    return out


def ballot_number(a: int, b: int) -> int:
    """Number of standard tableaux of shape (a, b), a >= b."""
    return comb(a + b, b) - (comb(a + b, b - 1) if b >= 1 else 0)


def descent_set(t: TwoRowTableau) -> frozenset[int]:
    w = t.word()
    return frozenset(i for i in range(1, t.size) if w[i - 1] == 1 and w[i] == 2)


def maj(t: TwoRowTableau) -> int:
    return sum(descent_set(t))


def charge(t: TwoRowTableau) -> int:
    """Sum of i such that i+1 sits in a strictly greater column than i."""
    total = 0
    for i in range(1, t.size):
        if t.position(i + 1)[1] > t.position(i)[1]:
            total += i
    return total


def embed_iN(t: TwoRowTableau) -> TwoRowTableau:
    n = t.size
    out = TwoRowTableau(t.row1 + (n + 1,), t.row2 + (n + 2,))
    assert maj(out) == maj(t) + n + 1
    return out


def principal_tableau(k: int, level: int) -> TwoRowTableau:
    """The principal tableau tau_k cut at ``level`` cells."""
    if k < 0 or level % 2 or level < 2 * k:
        raise InvalidArgument(f"need even level >= 2k, got k={k}, level={level}")
    t = TwoRowTableau(tuple(range(1, 2 * k + 1)), ())
    while t.size < level:
        t = embed_iN(t)
    return t


def _strip(t: TwoRowTableau) -> TwoRowTableau | None:
    """Inverse of embed_iN when the last two cells follow the tail pattern."""
    n = t.size
    if n >= 2 and t.row1 and t.row2 and t.row1[-1] == n - 1 and t.row2[-1] == n:
        return TwoRowTableau(t.row1[:-1], t.row2[:-1])
    return None


@dataclass(frozen=True, order=True)
class SerpentineTableau:
    """Infinite two-row tableau, tail-equivalent to some principal tableau.

    Always held in canonical form: the smallest even level at which the
    remaining cells follow the tail pattern.  Equality is therefore
    tail-equivalence.
    """

    level: int
    base: TwoRowTableau

    def __post_init__(self):
        if self.level % 2 or self.level != self.base.size:
            raise InvalidArgument(f"base must have an even number of cells equal to level={self.level}")
        t = self.base
        while (s := _strip(t)) is not None:
            t = s
        object.__setattr__(self, "base", t)
        object.__setattr__(self, "level", t.size)

    @classmethod
    def of(cls, base: TwoRowTableau) -> "SerpentineTableau":
        return cls(base.size, base)

    @property
    def k(self) -> int:
        """Index of the principal tableau this one is tail-equivalent to."""
        return (len(self.base.row1) - len(self.base.row2)) // 2

    def at_level(self, level: int) -> TwoRowTableau:
        """The truncation [tau]_level; level must be even and >= canonical level."""
        if level % 2 or level < self.level:
            raise InvalidArgument(f"level {level} below canonical level {self.level}")
        t = self.base
        while t.size < level:
            t = embed_iN(t)
        return t

    def __str__(self):
        return f"{self.base}@{self.level}"


def stable_major_index(t: SerpentineTableau) -> int:
    n = t.level // 2
    return n * n - maj(t.base)


def principal(k: int) -> SerpentineTableau:
    return SerpentineTableau.of(principal_tableau(k, 2 * k))


def _high_maj_words(level: int, min_maj: int) -> Iterator[tuple[int, ...]]:
    """Ballot words of length ``level`` whose maj is at least ``min_maj``.

    Branches are cut when even the best completion (descents at level-1,
    level-3, ... down to the current position) cannot reach ``min_maj``.
    """
    word: list[int] = []

    def best_rest(t):
        # descents possible at positions t..level-1, pairwise non-adjacent
        top = level - 1
        if top < t:
            return 0
        cnt = (top - t) // 2 + 1
        return cnt * (top + top - 2 * (cnt - 1)) // 2

    def rec(ones, twos, cur):
        t = ones + twos
        if t == level:
            if twos <= ones and cur >= min_maj:
                yield tuple(word)
            return
        if cur + best_rest(max(t, 1)) < min_maj:
            return
        word.append(1)
        yield from rec(ones + 1, twos, cur)
        word.pop()
        if twos < ones:
            gain = t if t >= 1 and word[-1] == 1 else 0
            word.append(2)
            yield from rec(ones, twos + 1, cur + gain)
            word.pop()

    yield from rec(0, 0, 0)


def enumerate_serpentine(r_max: int) -> list[SerpentineTableau]:
    """All serpentine tableaux with stable major index <= r_max, sorted by (r, level, base).

    A canonical base of level 2n does not end in the tail pattern, so
    position 2n-1 is not a descent and maj <= n(n-1), i.e. r >= n.  Hence
    every class with r <= r_max is visible at level 2*max(r_max, 1).
    """
    if r_max < 0:
        raise InvalidArgument("r_max must be nonnegative")
    level = 2 * max(r_max, 1)
    n = level // 2
    found = set()
    for w in _high_maj_words(level, n * n - r_max):
        found.add(SerpentineTableau.of(TwoRowTableau.from_word(w)))
    return sorted(found, key=lambda s: (stable_major_index(s), s.level, s.base))


def serpentine_level_set(n: int) -> list[SerpentineTableau]:
    """T^(N): serpentine tableaux that follow the tail pattern from level N on."""
    if n < 0 or n % 2:
        raise InvalidArgument(f"level must be even and nonnegative, got {n}")
    return sorted({SerpentineTableau.of(t) for t in enumerate_two_row_tableaux(n)},
                  key=lambda s: (stable_major_index(s), s.level, s.base))


def maj_generating_polynomial(tableaux: Sequence[TwoRowTableau]) -> QPoly:
    return QPoly.from_exponents(maj(t) for t in tableaux)


def serpentine_generating_function(r_max: int) -> QPoly:
    return QPoly.from_exponents(stable_major_index(s) for s in enumerate_serpentine(r_max))

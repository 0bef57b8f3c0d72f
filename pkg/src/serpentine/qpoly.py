"""Integer Laurent polynomials in a single variable q."""

from __future__ import annotations

from typing import Iterable, Mapping


class QPoly:
    """Laurent polynomial with integer coefficients, stored sparsely.

    Zero coefficients are never stored, so two equal polynomials have equal
    ``coeffs`` dicts.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if v:
                c[int(e)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        """Sum of q**e over the given exponents (with repetition)."""
        c: dict[int, int] = {}
        for e in exponents:
            c[e] = c.get(e, 0) + 1
        return cls(c)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPoly(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def invert(self) -> "QPoly":
        """Substitute q -> 1/q."""
        return QPoly({-e: v for e, v in self._c.items()})

    def truncate(self, max_degree: int) -> "QPoly":
        return QPoly({e: v for e, v in self._c.items() if e <= max_degree})

    def at_one(self) -> int:
        return sum(self._c.values())

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def to_pairs(self) -> list[list[int]]:
        return [[e, v] for e, v in self.items()]

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                mono = str(v)
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if v == 1 else (f"-{base}" if v == -1 else f"{v}*{base}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


def partition_series(max_degree: int) -> QPoly:
    """prod_{i>=1} 1/(1-q^i), truncated at q**max_degree."""
    series = QPoly({0: 1})
    for i in range(1, max_degree + 1):
        # multiply by 1/(1-q^i) = sum_j q^(i*j)
        geometric = QPoly({i * j: 1 for j in range(max_degree // i + 1)})
        series = (series * geometric).truncate(max_degree)
    return series


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient [n choose k]_q."""
    if k < 0 or k > n:
        return QPoly()
    rows = [QPoly({0: 1})]
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = rows[j - 1] if j >= 1 else QPoly()
            right = rows[j].shift(j) if j < m else QPoly()
            new.append(left + right)
        rows = new
    return rows[k]

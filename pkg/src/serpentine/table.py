"""Reference table of serpentine tableaux with r <= 4 and sample images in Lambda.

Each image Phi(tau) is one admissible choice: the isomorphism is only pinned
down up to the commutant of L_0, so the checks below are structural (degree,
orthogonality, box membership, principal tableaux) rather than entry-wise.

The r = 3 level-4 entry is [1 3 4 / 2].  The tableau [1 2 3 / 4] is the
level-4 truncation of tau_1 and has r = 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .report import Report
from .symfun import SymFun, inner_product, schur_expansion, schur_to_p
from .tableaux import (SerpentineTableau, TwoRowTableau, enumerate_serpentine,
                       principal, stable_major_index)
from .virasoro import FockState, L_apply

p = SymFun.p


@dataclass(frozen=True)
class TableEntry:
    r: int
    tableau: SerpentineTableau
    image: SymFun

    def __str__(self):
        return f"r={self.r} {self.tableau} -> {self.image}"


def _entry(r, row1, row2, image) -> TableEntry:
    return TableEntry(r, SerpentineTableau.of(TwoRowTableau(tuple(row1), tuple(row2))), image)


TABLE: tuple[TableEntry, ...] = (
    _entry(0, (), (), SymFun.one()),
    _entry(1, (1, 2), (), p(1)),
    _entry(2, (1, 2, 4), (3,), p(2)),
    _entry(2, (1, 2), (3, 4), p(1, 1)),
    _entry(3, (1, 3, 4), (2,), p(1, 1, 1) - p(3)),
    _entry(3, (1, 2, 4, 6), (3, 5), p(1, 1, 1) + p(3) * 8),
    _entry(3, (1, 2, 4), (3, 5, 6), p(1, 2)),
    _entry(4, (1, 2, 3, 4), (), p(1, 1, 1, 1) + p(2, 2) * 3 - p(1, 3) * 4),
    _entry(4, (1, 3, 4), (2, 5, 6), p(1, 1, 1, 1) - p(2, 2) * 3 + p(1, 3) * 2),
    _entry(4, (1, 2, 4, 6), (3, 5, 7, 8), p(1, 1, 1, 1) + p(2, 2) * 12 + p(1, 3) * 32),
    _entry(4, (1, 3, 4, 6), (2, 5), p(1, 1, 2) - p(4)),
    _entry(4, (1, 2, 4, 6, 8), (3, 5, 7), p(1, 1, 2) + p(4) * 4),
)


def _proportional(f: SymFun, g: SymFun) -> bool:
    if not f or not g:
        return not f and not g
    lam = f.support()[0]
    if not g.coeff(lam):
        return False
    return f * g.coeff(lam) == g * f.coeff(lam)


def verify_table(strict: bool = False) -> Report:
    report = Report()
    counts = Counter(e.r for e in TABLE)
    got = [counts.get(r, 0) for r in range(5)]
    report.add("entries per r = (1,1,2,3,5)", got == [1, 1, 2, 3, 5], got, [1, 1, 2, 3, 5])

    listed = sorted(e.tableau for e in TABLE)
    expected = sorted(enumerate_serpentine(4))
    report.add("listed tableaux are exactly the serpentine tableaux with r <= 4",
               listed == expected, [str(t) for t in listed], [str(t) for t in expected])

    for e in TABLE:
        r = stable_major_index(e.tableau)
        report.add(f"r({e.tableau}) = {e.r}", r == e.r, r, e.r)
        deg = e.image.degree() if e.image.is_homogeneous() else None
        report.add(f"deg Phi({e.tableau}) = r", deg == e.r, deg, e.r, witness=str(e.tableau))
        n = e.tableau.level // 2
        inside = all(lam.fits_in_box(n, n) for lam in schur_expansion(e.image))
        report.add(f"Phi({e.tableau}) lies in Lambda_{n}x{n}", inside,
                   sorted(schur_expansion(e.image)), None, witness=str(e.tableau))
        l0 = L_apply(0, FockState.of(e.image))
        report.add(f"L_0 Phi({e.tableau}) = {e.r} Phi", l0 == FockState.of(e.image * e.r))

    for a, b in combinations(TABLE, 2):
        if a.r == b.r:
            ip = inner_product(a.image, b.image)
            report.add(f"<{a.image}, {b.image}> = 0", ip == 0, ip, 0,
                       witness=[str(a.tableau), str(b.tableau)])

    for k in (0, 1, 2):
        tau = principal(k)
        (entry,) = [e for e in TABLE if e.tableau == tau]
        ok = _proportional(entry.image, schur_to_p((k,) * k))
        report.add(f"Phi(tau_{k}) is proportional to s_({k}^{k})", ok, entry.image,
                   schur_to_p((k,) * k))
    if strict:
        report.raise_on_failure()
    return report

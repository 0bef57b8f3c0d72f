"""``serp``: run the verifications from the command line and emit JSON reports.

Exit status is 0 when every check passes, 1 on a failed check or a golden
mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import difflib
import json
import sys
import time
from dataclasses import asdict, dataclass
from math import comb
from pathlib import Path
from typing import Callable

from .errors import InvalidArgument
from .fusion import build_eval_module, graded_multiplicities, swfin_identity, verify_kedem, z_points
from .qpoly import QPoly, partition_series, q_binomial
from .report import Report
from .symfun import kedem_transform, kostka_foulkes_standard, kostka_number, maj_qcharacter
from .table import verify_table
from .tableaux import (charge, descent_set, embed_iN, enumerate_serpentine, enumerate_two_row_tableaux,
                       maj, principal, serpentine_generating_function, serpentine_level_set,
                       stable_major_index, two_row_shapes)
from .vertex import (calibrate, verify_cauchy, verify_ebasis_lemma, verify_gamma_commutation,
                     verify_theorem3, verify_vandermonde)
from .virasoro import (L0_on_serpentine, verify_d_operator, verify_degree_operator, verify_heisenberg,
                       verify_singular_vector, verify_virasoro_bracket)

SWFIN_MAX = 16

# Degree bounds used when --degree is not given.
DEFAULT_DEGREE = {"serpentine": 12, "virasoro-check": 8, "gamma-check": 6}


@dataclass
class RunConfig:
    degree_bound: int | None = None
    n_max: int = 12
    k_max: int = 3
    z_choice: str = "consecutive"
    output_format: str = "json"
    n: int | None = None
    k: int | None = None
    seed_level: int = 8
    method: str = "auto"

    def __post_init__(self):
        if self.degree_bound is not None and self.degree_bound < 1:
            raise InvalidArgument("degree bound must be >= 1")
        if self.n_max % 2 or self.n_max < 2:
            raise InvalidArgument("n_max must be even and >= 2")
        if self.k_max < 1:
            raise InvalidArgument("k_max must be >= 1")
        if self.seed_level % 2 or self.seed_level < 0:
            raise InvalidArgument("seed level must be even and >= 0")

    def degree(self, name: str) -> int:
        return self.degree_bound if self.degree_bound is not None else DEFAULT_DEGREE[name]


def _tableaux(cfg: RunConfig) -> Report:
    n = cfg.n if cfg.n is not None else 4
    report = Report()
    top = n * (n - 1) // 2
    for t in enumerate_two_row_tableaux(n):
        m, c = maj(t), charge(t)
        report.add(f"{t} descents={sorted(descent_set(t))} maj={m} charge={c}", m + c == top, m + c, top,
                   witness=str(t))
    return report


def _stats(cfg: RunConfig) -> Report:
    report = Report()
    n_top = cfg.n if cfg.n is not None else cfg.n_max
    for n in range(1, n_top + 1):
        ts = enumerate_two_row_tableaux(n)
        top = n * (n - 1) // 2
        bad = [str(t) for t in ts if maj(t) + charge(t) != top]
        report.add(f"N={n} maj + charge = {top} on {len(ts)} tableaux", not bad, len(ts) - len(bad), len(ts),
                   witness=bad[:3])
        bad = [str(t) for t in ts if maj(embed_iN(t)) != maj(t) + n + 1]
        report.add(f"N={n} maj(i_N t) = maj(t) + {n + 1}", not bad, len(ts) - len(bad), len(ts),
                   witness=bad[:3])
    for n in range(2, SWFIN_MAX + 1, 2):
        lhs, rhs = swfin_identity(n)
        report.add(f"N={n} sum (2k+1) #SYT(n+k, n-k) = 2^N", lhs == rhs, lhs, rhs)
    return report


def _serpentine(cfg: RunConfig) -> Report:
    report = Report()
    d = cfg.degree("serpentine")
    gf, ps = serpentine_generating_function(d), partition_series(d)
    report.add(f"sum q^r(tau) = prod (1-q^i)^-1 mod q^{d + 1}", gf == ps, gf, ps)
    counts = [gf[r] for r in range(5)]
    report.add("counts at r=0..4", counts == [1, 1, 2, 3, 5], counts, [1, 1, 2, 3, 5])
    for t in enumerate_serpentine(min(d, 4)):
        report.add(f"r({t}) = {stable_major_index(t)}", True, stable_major_index(t), None)
    for k in range(cfg.k_max + 1):
        r = stable_major_index(principal(k))
        report.add(f"r(tau_{k}) = {k * k}", r == k * k, r, k * k)
    lvl = cfg.seed_level
    ts = serpentine_level_set(lvl)
    want = comb(lvl, lvl // 2)
    report.add(f"|T^({lvl})| = C({lvl}, {lvl // 2})", len(ts) == want, len(ts), want)
    dist = QPoly.from_exponents(stable_major_index(t) for t in ts)
    qb = q_binomial(lvl, lvl // 2)
    report.add(f"sum over T^({lvl}) of q^r = [{lvl} choose {lvl // 2}]_q", dist == qb, dist, qb)
    return report


def _kostka_foulkes(cfg: RunConfig) -> Report:
    report = Report()
    ns = [cfg.n] if cfg.n is not None else range(1, cfg.n_max + 1)
    for n in ns:
        for shape in two_row_shapes(n):
            kf = kostka_foulkes_standard(shape)
            report.add(f"K_{shape},1^{n}(q) = {kf}", kf.at_one() == kostka_number(shape, (1,) * n),
                       kf, kostka_number(shape, (1,) * n))
            kt, mj = kedem_transform(shape), maj_qcharacter(shape)
            report.add(f"q^{n * (n - 1) // 2} K_{shape}(1/q) = maj character", kt == mj, kt, mj)
    return report


def _fusion_ns(cfg: RunConfig) -> list[int]:
    if cfg.n is not None:
        if cfg.n % 2 or cfg.n < 2:
            raise InvalidArgument(f"--n must be even and >= 2 for fusion-check, got {cfg.n}")
        return [cfg.n]
    return list(range(2, cfg.n_max + 1, 2))


def _fusion(cfg: RunConfig) -> Report:
    report = Report()
    for n in _fusion_ns(cfg):
        z = z_points(n, cfg.z_choice)
        gm = graded_multiplicities(build_eval_module(n, z), cfg.method)
        for k, ch in sorted(gm.characters.items()):
            report.add(f"N={n} ch_q M_{k}", True, ch, None)
        report.extend(verify_kedem(n, z, cfg.method))
    return report


def _virasoro(cfg: RunConfig) -> Report:
    d = cfg.degree("virasoro-check")
    report = Report()
    for m in range(-4, 5):
        for n in range(-4, 5):
            report.extend(verify_virasoro_bracket(m, n, d))
    report.extend(verify_heisenberg(d))
    report.extend(verify_degree_operator(max(d, 10)))
    report.extend(verify_d_operator(d))
    return report


def _singular(cfg: RunConfig) -> Report:
    report = Report()
    ks = [cfg.k] if cfg.k is not None else range(cfg.k_max + 1)
    for k in ks:
        report.extend(verify_singular_vector(k, 6))
        r = L0_on_serpentine(principal(k))
        report.add(f"L_0 eigenvalue of s_({k}^{k}) = r(tau_{k})", r == k * k, r, k * k)
    return report


def _theorem3(cfg: RunConfig) -> Report:
    conv, report = calibrate()
    report.add("chosen convention", True, asdict(conv), None)
    ks = [cfg.k] if cfg.k is not None else range(1, cfg.k_max + 1)
    for k in ks:
        report.extend(verify_theorem3(k))
    return report


def _ebasis(cfg: RunConfig) -> Report:
    report = Report()
    ks = [cfg.k] if cfg.k is not None else range(1, cfg.k_max + 1)
    for k in ks:
        report.extend(verify_ebasis_lemma(k))
        size = len(serpentine_level_set(2 * k))
        report.add(f"|T^({2 * k})| = C({2 * k}, {k})", size == comb(2 * k, k), size, comb(2 * k, k))
    return report


def _gamma(cfg: RunConfig) -> Report:
    d = cfg.degree("gamma-check")
    report = verify_gamma_commutation(d)
    report.extend(verify_cauchy(3, d))
    report.extend(verify_vandermonde(4))
    return report


def _table(cfg: RunConfig) -> Report:
    return verify_table()


COMMANDS: dict[str, Callable[[RunConfig], Report]] = {
    "tableaux": _tableaux,
    "stats": _stats,
    "serpentine": _serpentine,
    "kostka-foulkes": _kostka_foulkes,
    "fusion-check": _fusion,
    "virasoro-check": _virasoro,
    "singular-check": _singular,
    "theorem3-check": _theorem3,
    "ebasis-check": _ebasis,
    "gamma-check": _gamma,
    "table-check": _table,
}


def _all(cfg: RunConfig) -> Report:
    report = Report()
    for name, fn in COMMANDS.items():
        if name == "tableaux":
            continue
        for c in fn(cfg).checks:
            c.name = f"{name}: {c.name}"
            report.checks.append(c)
    return report


def run_subcommand(name: str, config: RunConfig) -> tuple[int, dict]:
    """Run one subcommand; returns (exit status, report document)."""
    fn = _all if name == "all" else COMMANDS.get(name)
    if fn is None:
        raise InvalidArgument(f"unknown subcommand {name!r}")
    start = time.perf_counter()
    report = fn(config)
    elapsed = int((time.perf_counter() - start) * 1000)
    resolved = asdict(config)
    if name in DEFAULT_DEGREE:
        resolved["degree_bound"] = config.degree(name)
    doc = {"subcommand": name, "config": resolved, "checks": report.to_dict(), "elapsed_ms": elapsed}
    return (0 if report.ok else 1), doc


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "tsv":
        lines = ["name\tstatus\tlhs\trhs"]
        for c in doc["checks"]:
            lines.append("\t".join([c["name"], c["status"],
                                    json.dumps(c["lhs"], sort_keys=True), json.dumps(c["rhs"], sort_keys=True)]))
        return "\n".join(lines) + "\n"
    if fmt == "pretty":
        lines = [f"{'ok  ' if c['status'] == 'pass' else 'FAIL'} {c['name']}" for c in doc["checks"]]
        bad = sum(c["status"] != "pass" for c in doc["checks"])
        lines.append(f"{doc['subcommand']}: {len(doc['checks']) - bad} passed, {bad} failed"
                     f" ({doc['elapsed_ms']} ms)")
        return "\n".join(lines) + "\n"
    raise InvalidArgument(f"unknown format {fmt!r}")


def golden_text(doc: dict) -> str:
    """The byte-stable part of a report: everything except timing."""
    return render({k: v for k, v in doc.items() if k != "elapsed_ms"}, "json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="serp", description="Exact checks for serpentine tableaux, "
                                 "fusion characters and the free-boson Fock space.")
    ap.add_argument("subcommand", choices=[*COMMANDS, "all"])
    ap.add_argument("--n", type=int, help="number of cells / tensor factors")
    ap.add_argument("--k", type=int, help="box size for theorem3-check, ebasis-check, singular-check")
    ap.add_argument("--degree", type=int, help="degree or truncation bound")
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--k-max", type=int, default=3)
    ap.add_argument("--z", choices=["consecutive", "shifted"], default="consecutive")
    ap.add_argument("--method", choices=["auto", "exact", "modular"], default="auto")
    ap.add_argument("--format", choices=["json", "tsv", "pretty"], default="json")
    ap.add_argument("--seed-level", type=int, default=8, help="even level for the T^(N) checks")
    ap.add_argument("--corpus", type=Path, help="golden directory; compare the report against it")
    ap.add_argument("--record", action="store_true", help="with --corpus, write the golden instead")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.record and args.corpus is None:
        ap.error("--record needs --corpus")
    try:
        cfg = RunConfig(degree_bound=args.degree, n_max=args.n_max, k_max=args.k_max, z_choice=args.z,
                        output_format=args.format, n=args.n, k=args.k, seed_level=args.seed_level,
                        method=args.method)
        status, doc = run_subcommand(args.subcommand, cfg)
    except InvalidArgument as e:
        print(f"serp: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, cfg.output_format))
    if args.corpus is not None:
        path = args.corpus / f"{args.subcommand}.json"
        text = golden_text(doc)
        if args.record:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        elif not path.exists():
            print(f"serp: no golden file at {path}", file=sys.stderr)
            return 1
        else:
            want = path.read_text(encoding="utf-8")
            if want != text:
                sys.stderr.writelines(difflib.unified_diff(want.splitlines(True), text.splitlines(True),
                                                           str(path), "actual"))
                return 1
    return status


if __name__ == "__main__":
    sys.exit(main())

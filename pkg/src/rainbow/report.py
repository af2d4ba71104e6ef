"""Bound-comparison reports: constructed palette against exact values and known bounds."""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from .coloring import read_graph
from .dominating import ProofGapError
from .families import FamilySpec, generate_family
from .graph import Graph, GraphError, diameter, radius
from .oracles import (DEFAULT_ALPHA_BUDGET, DEFAULT_CHI_BUDGET, BudgetExceeded, clique_cover_number,
                      independence_number, rc_exact)
from .pipeline import dominating_tree_of, rainbow_color_bounded

REPORT_VERSION = "rainbow-report/1"

COLUMNS = ("name", "n", "e", "delta", "diam", "rad", "alpha", "Y", "k", "rc", "2a-1", "2chibar-1",
           "3n/4", "ceil(n/2)", "rad(rad+2)", "route", "verified")


@dataclass(frozen=True)
class ReportConfig:
    alpha_budget: int = DEFAULT_ALPHA_BUDGET
    rc_budget: int = 2_000_000
    chi_budget: int = DEFAULT_CHI_BUDGET
    exact_rc: bool = True
    clique_cover: bool = True
    jobs: int = 1


@dataclass
class BoundRow:
    name: str
    n: int
    e: int
    delta: int
    diam: int
    rad: int
    alpha: Optional[int]
    y: Optional[int]
    k: Optional[int]
    rc: Optional[int]
    chibar: Optional[int]
    route: str
    verified: bool
    budget_ok: bool
    rc_interval: Optional[tuple[int, int]] = None
    error: str = ""

    @property
    def bound_alpha(self) -> Optional[int]:
        return None if self.alpha is None else 2 * self.alpha - 1

    @property
    def bound_chibar(self) -> Optional[int]:
        return None if self.chibar is None else 2 * self.chibar - 1

    @property
    def three_quarter_n(self) -> float:
        return 3 * self.n / 4

    @property
    def half_n(self) -> int:
        return math.ceil(self.n / 2)

    @property
    def rad_bound(self) -> int:
        return self.rad * (self.rad + 2)

    def cells(self) -> list[str]:
        def show(x):
            return "-" if x is None else str(x)
        rc = show(self.rc)
        if self.rc is None and self.rc_interval is not None:
            rc = f"[{self.rc_interval[0]},{self.rc_interval[1]}]"
        return [self.name, str(self.n), str(self.e), str(self.delta), str(self.diam), str(self.rad),
                show(self.alpha), show(self.y), show(self.k), rc, show(self.bound_alpha),
                show(self.bound_chibar), f"{self.three_quarter_n:g}", str(self.half_n),
                str(self.rad_bound), self.route, str(self.verified).lower()]


@dataclass(frozen=True)
class Check:
    name: str
    passed: int
    total: int
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class BoundReport:
    rows: list[BoundRow]
    checks: list[Check] = field(default_factory=list)

    @property
    def all_verified(self) -> bool:
        return all(r.verified and r.budget_ok for r in self.rows)

    def to_text(self) -> str:
        lines = [f"# {REPORT_VERSION}", "columns " + " ".join(COLUMNS)]
        lines += ["row " + " ".join(r.cells()) for r in self.rows]
        for r in self.rows:
            if r.error:
                lines.append(f"error {r.name} {r.error}")
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            tail = f" ({', '.join(c.failures)})" if c.failures else ""
            lines.append(f"check {c.name} {status} {c.passed}/{c.total}{tail}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for r in self.rows:
            d = asdict(r)
            d.update({"2a-1": r.bound_alpha, "2chibar-1": r.bound_chibar, "3n/4": r.three_quarter_n,
                      "ceil(n/2)": r.half_n, "rad(rad+2)": r.rad_bound})
            rows.append(d)
        checks = [asdict(c) | {"ok": c.ok} for c in self.checks]
        return json.dumps({"version": REPORT_VERSION, "rows": rows, "checks": checks}, indent=2) + "\n"


def parse_report(text: str) -> list[dict]:
    """Read the rows of a text report back as column -> string dicts."""
    lines = text.splitlines()
    if not lines or lines[0] != f"# {REPORT_VERSION}":
        raise ValueError("not a bound report (bad version header)")
    cols = None
    rows = []
    for line in lines[1:]:
        key, _, rest = line.partition(" ")
        if key == "columns":
            cols = rest.split()
        elif key == "row":
            if cols is None:
                raise ValueError("row before columns line")
            rows.append(dict(zip(cols, rest.split())))
    return rows


# --- sweeps ----------------------------------------------------------------------------

def _values(name: str, text: str) -> list:
    cast = float if name == "p" else int
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [cast(v) for v in text.split("/")]


def parse_sweep(text: str) -> list[FamilySpec]:
    """``example1:t=2..4,s=2/5/10`` -> the product grid, first parameter slowest."""
    name, _, rest = text.strip().partition(":")
    keys, grids = [], []
    for part in filter(None, rest.split(",")):
        k, eq, v = part.partition("=")
        if not eq:
            raise GraphError(f"bad sweep parameter {part!r}")
        keys.append(k.strip())
        grids.append(_values(k.strip(), v.strip()))
    return [FamilySpec(name.strip(), dict(zip(keys, combo))) for combo in itertools.product(*grids)]


def graphs_from_dir(path, pattern: str = "*.edges") -> list[tuple[str, Graph]]:
    return [(p.name, read_graph(p)) for p in sorted(Path(path).glob(pattern))]


# --- rows ------------------------------------------------------------------------------

def build_row(name: str, g: Graph, cfg: ReportConfig = ReportConfig()) -> BoundRow:
    if not g.is_connected():
        raise GraphError(f"{name}: graph is disconnected")
    try:
        alpha = independence_number(g, budget=cfg.alpha_budget).alpha
    except BudgetExceeded:
        alpha = None
    dt = dominating_tree_of(g)
    y = len(dt.Y) if dt is not None else None
    error = ""
    try:
        cert = rainbow_color_bounded(g, alpha_budget=cfg.alpha_budget)
        k, route, verified, budget_ok = cert.palette_size, cert.route, cert.verdict.connected, cert.budget_ok
    except ProofGapError as ex:
        k, route, verified, budget_ok, error = None, "error", False, False, str(ex).replace("\n", " ")
    rc = interval = None
    if cfg.exact_rc:
        try:
            rc = rc_exact(g, budget=cfg.rc_budget).rc
        except BudgetExceeded as ex:
            interval = ex.interval
    chibar = None
    if cfg.clique_cover:
        try:
            chibar = clique_cover_number(g, budget=cfg.chi_budget)
        except BudgetExceeded:
            pass
    return BoundRow(name, g.n, g.m, g.min_degree(), diameter(g), radius(g), alpha, y, k, rc, chibar,
                    route, verified, budget_ok, interval, error)


def _row_job(args):
    name, g, cfg = args
    return build_row(name, g, cfg)


def invariant_checks(rows: list[BoundRow]) -> list[Check]:
    """The chain diam <= rc <= k <= 2a-1 <= 2chibar-1, link by link, where computed."""
    def check(name, pred, applies):
        sel = [r for r in rows if applies(r)]
        bad = tuple(r.name for r in sel if not pred(r))
        return Check(name, len(sel) - len(bad), len(sel), bad)

    return [
        check("verified", lambda r: r.verified and r.budget_ok, lambda r: True),
        check("k<=2a-1", lambda r: r.k <= r.bound_alpha, lambda r: r.k is not None and r.alpha is not None),
        check("diam<=rc", lambda r: r.diam <= r.rc, lambda r: r.rc is not None),
        check("rc<=k", lambda r: r.rc <= r.k, lambda r: r.rc is not None and r.k is not None),
        check("2a-1<=2chibar-1", lambda r: r.bound_alpha <= r.bound_chibar,
              lambda r: r.alpha is not None and r.chibar is not None),
    ]


def build_report(items: list[tuple[str, Graph]], cfg: ReportConfig = ReportConfig()) -> BoundReport:
    jobs = [(name, g, cfg) for name, g in items]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_row_job, jobs))
    else:
        rows = [_row_job(j) for j in jobs]
    return BoundReport(rows, invariant_checks(rows))


def sweep_report(sweeps: list[str], cfg: ReportConfig = ReportConfig()) -> BoundReport:
    items = []
    for text in sweeps:
        for spec in parse_sweep(text):
            items.append((str(spec), generate_family(spec)))
    return build_report(items, cfg)

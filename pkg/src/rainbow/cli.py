"""Command line: ``rainbow gen|color|verify|exact|report``.

Exit codes: 0 ok, 2 usage or input error (bad spec, disconnected graph,
edge mismatch), 3 verification failure, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .coloring import ColoringError, format_edge_list, read_coloring, read_graph
from .dominating import ProofGapError
from .families import FamilySpec, generate_family, parse_family
from .graph import GraphError
from .oracles import (DEFAULT_ALPHA_BUDGET, DEFAULT_CHI_BUDGET, DEFAULT_RC_BUDGET, BudgetExceeded,
                      clique_cover, independence_number, is_rainbow_connected, rc_exact)
from .pipeline import rainbow_color_bounded, write_certificate
from .report import ReportConfig, build_report, graphs_from_dir, sweep_report

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4

log = logging.getLogger("rainbow")


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.format == "json" else text)


def _load(path):
    try:
        return read_graph(path)
    except OSError as ex:
        raise UsageError(f"cannot read {path}: {ex.strerror}")


# --- gen -------------------------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = parse_family(args.family)
    extra = {k: getattr(args, k) for k in ("n", "t", "s", "p") if getattr(args, k) is not None}
    if spec.name in ("random", "random_connected"):
        extra.setdefault("seed", args.seed)
    spec = FamilySpec(spec.name, {**spec.params, **extra})
    g = generate_family(spec)
    text = format_edge_list(g, comment=f"family {spec}")
    if args.output:
        Path(args.output).write_text(text)
        _emit(args, {"family": str(spec), "n": g.n, "e": g.m, "connected": g.is_connected()},
              f"n={g.n} e={g.m} family={spec} connected={str(g.is_connected()).lower()}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- color -----------------------------------------------------------------------------

def cmd_color(args) -> int:
    g = _load(args.input)
    stem = Path(args.output) if args.output else Path(args.input).with_suffix("")
    try:
        cert = rainbow_color_bounded(g, alpha_budget=args.alpha_budget)
    except ProofGapError as ex:
        diag = stem.with_name(stem.name + ".diag")
        state = getattr(ex, "state", {})
        diag.write_text(f"error {ex}\n" + "".join(f"{k} {v}\n" for k, v in state.items()))
        print(f"verification failed: {ex}; diagnostics in {diag}", file=sys.stderr)
        return EXIT_VERIFY
    cpath, spath = write_certificate(cert, stem)
    ok = cert.verdict.connected and cert.budget_ok
    payload = {"k": cert.palette_size, "route": cert.route, "verified": cert.verdict.connected,
               "budget_ok": cert.budget_ok, "witness": list(cert.witness),
               "coloring": str(cpath), "certificate": str(spath)}
    _emit(args, payload, f"k={cert.palette_size} route={cert.route} "
                         f"verified={str(cert.verdict.connected).lower()} "
                         f"budget_ok={str(cert.budget_ok).lower()} witness_size={len(cert.witness)}")
    return EXIT_OK if ok else EXIT_VERIFY


# --- verify ----------------------------------------------------------------------------

def cmd_verify(args) -> int:
    g = _load(args.input)
    try:
        col = read_coloring(args.coloring)
    except OSError as ex:
        raise UsageError(f"cannot read {args.coloring}: {ex.strerror}")
    missing, extra = col.missing_edges(g), col.extra_edges(g)
    if missing or extra:
        print(f"edge mismatch: uncolored {missing[:10]} unknown {extra[:10]}", file=sys.stderr)
        return EXIT_USAGE
    verdict = is_rainbow_connected(g, col)
    payload = {"connected": verdict.connected, "violations": [list(p) for p in verdict.violations],
               "states_explored": verdict.states_explored}
    text = f"connected={str(verdict.connected).lower()} violations={len(verdict.violations)}"
    if verdict.violations:
        text += " first=" + " ".join(f"{u}-{v}" for u, v in verdict.violations[:10])
    _emit(args, payload, text)
    return EXIT_OK if verdict.connected else EXIT_VERIFY


# --- exact -----------------------------------------------------------------------------

def cmd_exact(args) -> int:
    g = _load(args.input)
    which = ("alpha", "rc", "chibar") if args.which == "all" else (args.which,)
    payload, lines, code = {}, [], EXIT_OK
    for what in which:
        try:
            if what == "alpha":
                res = independence_number(g, budget=args.alpha_budget)
                payload["alpha"] = {"value": res.alpha, "witness": list(res.witness)}
                lines.append(f"alpha={res.alpha} witness={' '.join(map(str, res.witness))}")
            elif what == "rc":
                res = rc_exact(g, budget=args.rc_budget)
                payload["rc"] = {"value": res.rc, "lower": res.lower,
                                 "witness": [[u, v, c] for (u, v), c in sorted(res.witness.colors.items())]}
                lines.append(f"rc={res.rc} lower={res.lower}")
            else:
                cover = clique_cover(g, budget=args.chi_budget)
                payload["chibar"] = {"value": len(cover), "cliques": cover}
                lines.append(f"chibar={len(cover)} cliques=" + " | ".join(" ".join(map(str, c)) for c in cover))
        except BudgetExceeded as ex:
            payload[what] = {"budget_exceeded": True, "nodes": ex.nodes,
                             "interval": list(ex.interval) if ex.interval else None}
            lines.append(f"{what}=budget nodes={ex.nodes}"
                         + (f" interval=[{ex.interval[0]},{ex.interval[1]}]" if ex.interval else ""))
            code = EXIT_BUDGET
    _emit(args, payload, "\n".join(lines))
    return code


# --- report ----------------------------------------------------------------------------

def cmd_report(args) -> int:
    cfg = ReportConfig(alpha_budget=args.alpha_budget, rc_budget=args.rc_budget, chi_budget=args.chi_budget,
                       exact_rc=not args.no_rc, clique_cover=not args.no_chibar, jobs=args.jobs)
    if args.dir:
        report = build_report(graphs_from_dir(args.dir, args.glob), cfg)
    elif args.family:
        report = sweep_report(args.family, cfg)
    else:
        raise UsageError("report needs --family SWEEP or --dir DIR")
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.output:
        Path(args.output).write_text(text)
        Path(args.output).with_suffix(".json" if args.format != "json" else ".txt").write_text(
            report.to_text() if args.format == "json" else report.to_json())
    sys.stdout.write(text)
    return EXIT_OK if report.all_verified else EXIT_VERIFY


# --- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--alpha-budget", type=int, default=DEFAULT_ALPHA_BUDGET)
    common.add_argument("--rc-budget", type=int, default=DEFAULT_RC_BUDGET)
    common.add_argument("--chi-budget", type=int, default=DEFAULT_CHI_BUDGET)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="rainbow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a family member as an edge list")
    g.add_argument("family", help="name or name:k=v,... e.g. example1:t=3,s=4")
    for name, typ in (("n", int), ("t", int), ("s", int), ("p", float)):
        g.add_argument(f"--{name}", type=typ)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", parents=[common], help="color with at most 2*alpha-1 colors, with certificate")
    c.add_argument("--input", "-i", required=True)
    c.add_argument("--output", "-o", help="stem for .coloring and .cert (default: input without suffix)")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a coloring for rainbow connectivity")
    v.add_argument("--input", "-i", required=True)
    v.add_argument("--coloring", "-c", required=True)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", parents=[common], help="exact alpha, rc, clique cover number")
    e.add_argument("--input", "-i", required=True)
    e.add_argument("--which", choices=("alpha", "rc", "chibar", "all"), default="all")
    e.set_defaults(func=cmd_exact)

    r = sub.add_parser("report", parents=[common], help="bound-comparison table over a sweep")
    r.add_argument("--family", action="append", help="sweep like example1:t=2..4,s=2/5/10 (repeatable)")
    r.add_argument("--dir", help="directory of edge-list files")
    r.add_argument("--glob", default="*.edges")
    r.add_argument("--output", "-o")
    r.add_argument("--no-rc", action="store_true", help="skip exact rc")
    r.add_argument("--no-chibar", action="store_true", help="skip exact clique cover number")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, ColoringError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

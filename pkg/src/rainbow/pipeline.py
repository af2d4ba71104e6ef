"""End-to-end constructive coloring with at most 2|witness| - 1 colors."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .cases import (ColoringCertificate, VerificationError, case1_coloring, case2_coloring,
                    procedure1_extend, tree_rainbow_coloring)
from .coloring import EdgeColoring, format_coloring
from .dominating import (DominatingTree, ProofGapError, build_dominating_tree, classify_neighborhood,
                         find_enlarged_independent_set, longest_pendant_path)
from .graph import BlowUp, Edge, Graph, GraphError, blow_up, bridges, canon
from .oracles import BudgetExceeded, independence_number, is_independent, is_rainbow_connected

log = logging.getLogger(__name__)

SIDECAR_VERSION = "rainbow-certificate/1"


@dataclass(frozen=True)
class Preprocessed:
    graph: Graph
    original_n: int
    blowups: tuple[BlowUp, ...]

    def original_edges(self) -> list[Edge]:
        return [e for e in self.graph.edges if e[1] < self.original_n]


def preprocess_bridges(g: Graph, pendant_only: bool = False) -> Preprocessed:
    """Blow up bridges with one new vertex each, so that min degree >= 2.

    ``pendant_only`` restricts this to bridges at a degree-1 vertex, which is
    all that the min-degree condition needs.
    """
    cut = sorted(bridges(g))
    if pendant_only:
        cut = [e for e in cut if g.degree(e[0]) == 1 or g.degree(e[1]) == 1]
    h = g
    prov = []
    for e in cut:
        h, bu = blow_up(h, e, 1)
        prov.append(bu)
    return Preprocessed(h, g.n, tuple(prov))


def _map_witness(pre: Preprocessed, g: Graph, witness) -> tuple[int, ...]:
    """Carry an independent set of the blown-up graph back to the original.

    A blow-up vertex is swapped for the leaf of its bridge when the bridge is
    pendant, otherwise for whichever bridge end stays independent; if neither
    does it is dropped.
    """
    W = {v for v in witness if v < pre.original_n}
    for v in sorted(witness):
        if v < pre.original_n:
            continue
        bu = next(b for b in pre.blowups if v in b.new_vertices)
        u1, u2 = bu.edge
        ends = sorted((u1, u2), key=lambda x: (g.degree(x) != 1, x))
        for cand in ends:
            if cand not in W and all(not g.has_edge(cand, x) for x in W):
                W.add(cand)
                break
    return tuple(sorted(W))


def _restrict(pre: Preprocessed, g: Graph, col: EdgeColoring):
    """Restrict to original edges; if that breaks rainbow connectivity, try
    giving each bridge one of its triangle's colors."""
    base = {e: col.colors[e] for e in pre.original_edges()}
    cand = EdgeColoring(base, col.k)
    verdict = is_rainbow_connected(g, cand)
    if verdict.connected or not pre.blowups:
        return cand, verdict, False
    colors = dict(base)
    for bu in pre.blowups:
        u, v = bu.edge
        w = bu.new_vertices[0]
        options = [col.colors[canon(u, v)], col.colors[canon(v, w)], col.colors[canon(u, w)]]
        best = None
        for c in options:
            colors[(u, v)] = c
            vv = is_rainbow_connected(g, EdgeColoring(colors, col.k))
            score = len(vv.violations)
            if best is None or score < best[0]:
                best = (score, c)
            if vv.connected:
                break
        colors[(u, v)] = best[1]
    cand = EdgeColoring(colors, col.k)
    return cand, is_rainbow_connected(g, cand), True


def _fresh_bridges(pre: Preprocessed, g: Graph, col: EdgeColoring):
    """Give fresh colors to bridges one at a time, always the bridge whose
    leaf appears in the most violating pairs, until the coloring verifies."""
    colors = dict(col.colors)
    k = col.k
    verdict = is_rainbow_connected(g, col)
    pending = {bu.edge for bu in pre.blowups}
    while not verdict.connected and pending:
        hits = {e: sum(1 for pair in verdict.violations if set(pair) & set(e)) for e in pending}
        e = max(sorted(pending), key=lambda x: hits[x])
        pending.discard(e)
        k += 1
        colors[e] = k
        verdict = is_rainbow_connected(g, EdgeColoring(colors, k))
    return EdgeColoring(colors, k), verdict


def _grow_witness(g: Graph, witness: tuple[int, ...], k: int, budget: int) -> tuple[int, ...]:
    """Find an independent set large enough for palette k, if there is one."""
    need = (k + 2) // 2
    if len(witness) >= need:
        return witness
    W = set(witness)
    for v in sorted(g.vertices(), key=lambda x: (g.degree(x), x)):
        if v not in W and all(not g.has_edge(v, x) for x in W):
            W.add(v)
    if len(W) >= need:
        return tuple(sorted(W))
    try:
        res = independence_number(g, budget=budget)
    except BudgetExceeded:
        return witness
    return tuple(sorted(res.witness)) if len(res.witness) > len(witness) else witness


def color_prepared(h: Graph, *, extended: bool = True, alpha_fallback: bool = True,
                   alpha_budget: int = 2_000_000) -> tuple[ColoringCertificate, DominatingTree]:
    """Run the construction on a non-complete graph with min degree >= 2."""
    dt = build_dominating_tree(h)
    part = classify_neighborhood(h, dt)
    enl = find_enlarged_independent_set(h, dt, part, extended=extended)
    if enl is not None:
        inner = tree_rainbow_coloring(h, dt.D, dt.T)
        col = procedure1_extend(h, dt.D, inner)
        verdict = is_rainbow_connected(h, col)
        return ColoringCertificate(col, tuple(sorted(enl.I)), enl.lemma, verdict), dt
    try:
        if len(h.induced_edges(dt.D)) > len(dt.T):
            return case1_coloring(h, dt, part), dt
        P = longest_pendant_path(dt)
        return case2_coloring(h, dt, P), dt
    except ProofGapError as gap:
        if not alpha_fallback:
            raise
        log.info("case construction failed (%s); trying a larger independent set", gap)
        try:
            res = independence_number(h, budget=alpha_budget)
        except BudgetExceeded:
            raise gap
        if res.alpha <= len(dt.Y):
            raise
        inner = tree_rainbow_coloring(h, dt.D, dt.T)
        col = procedure1_extend(h, dt.D, inner)
        verdict = is_rainbow_connected(h, col)
        witness = res.witness[: len(dt.Y) + 1]
        return ColoringCertificate(col, tuple(witness), "fallback-alpha", verdict, True,
                                   (f"gap: {gap}",)), dt


def rainbow_color_bounded(g: Graph, *, pendant_only: bool = True, extended: bool = True,
                          alpha_fallback: bool = True, alpha_budget: int = 2_000_000) -> ColoringCertificate:
    """Color a connected graph with at most 2 alpha(G) - 1 colors, with proof.

    The returned certificate carries an independent set W of g; the palette
    is at most 2|W| - 1 whenever ``budget_ok`` holds. Raises on anything
    that fails verification.
    """
    if not g.is_connected():
        raise GraphError("graph is disconnected; rc is undefined")
    if g.n <= 1:
        col = EdgeColoring({}, 0)
        return ColoringCertificate(col, (0,) if g.n else (), "complete", is_rainbow_connected(g, col))
    if g.is_complete():
        col = EdgeColoring({e: 1 for e in g.edges}, 1)
        return ColoringCertificate(col, (0,), "complete", is_rainbow_connected(g, col))
    pre = preprocess_bridges(g, pendant_only=pendant_only)
    cert, dt = color_prepared(pre.graph, extended=extended, alpha_fallback=alpha_fallback,
                              alpha_budget=alpha_budget)
    if not pre.blowups:
        return cert
    witness = _map_witness(pre, g, cert.witness)
    if not is_independent(g, witness):
        raise ProofGapError("mapped witness is not independent", witness=witness)
    col, verdict, touched = _restrict(pre, g, cert.coloring)
    notes = list(cert.notes)
    if not verdict.connected:
        col, verdict = _fresh_bridges(pre, g, col)
        touched = True
        notes.append("bridges recolored with fresh colors")
        witness = _grow_witness(g, witness, col.k, alpha_budget)
    out = ColoringCertificate(col, witness, cert.route, verdict, cert.fallback_used or touched, tuple(notes))
    if not verdict.connected:
        raise VerificationError("restricted coloring is not rainbow connected", route=cert.route,
                                violations=verdict.violations)
    return out


# --- serialization ---------------------------------------------------------------------------

def format_sidecar(cert: ColoringCertificate, extra: Optional[dict] = None) -> str:
    rows = [
        f"# {SIDECAR_VERSION}",
        f"route {cert.route}",
        f"k {cert.palette_size}",
        f"witness_size {len(cert.witness)}",
        "witness " + " ".join(map(str, cert.witness)),
        f"budget_ok {str(cert.budget_ok).lower()}",
        f"fallback_used {str(cert.fallback_used).lower()}",
        f"verified {str(cert.verdict.connected).lower()}",
        f"violations {len(cert.verdict.violations)}",
        f"states_explored {cert.verdict.states_explored}",
    ]
    for note in cert.notes:
        rows.append(f"note {note}")
    for key, val in (extra or {}).items():
        rows.append(f"{key} {val}")
    return "\n".join(rows) + "\n"


def parse_sidecar(text: str) -> dict:
    lines = text.splitlines()
    if not lines or lines[0] != f"# {SIDECAR_VERSION}":
        raise ValueError("not a certificate sidecar (bad version header)")
    out: dict = {"note": []}
    for line in lines[1:]:
        key, _, val = line.partition(" ")
        if key == "note":
            out["note"].append(val)
        else:
            out[key] = val
    out["k"] = int(out["k"])
    out["witness"] = tuple(int(x) for x in out.get("witness", "").split())
    for key in ("budget_ok", "fallback_used", "verified"):
        out[key] = out[key] == "true"
    return out


def write_certificate(cert: ColoringCertificate, stem, extra: Optional[dict] = None) -> tuple[Path, Path]:
    stem = Path(stem)
    cpath = stem.with_name(stem.name + ".coloring")
    spath = stem.with_name(stem.name + ".cert")
    cpath.write_text(format_coloring(cert.coloring))
    spath.write_text(format_sidecar(cert, extra))
    return cpath, spath


def dominating_tree_of(g: Graph, pendant_only: bool = True) -> Optional[DominatingTree]:
    """The dominating tree the pipeline builds for g, or None for trivial inputs."""
    if g.n <= 1 or g.is_complete() or not g.is_connected():
        return None
    return build_dominating_tree(preprocess_bridges(g, pendant_only=pendant_only).graph)

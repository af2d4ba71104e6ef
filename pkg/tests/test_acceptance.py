"""Acceptance criteria, one test each, printing a PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""

import math
import time

import networkx as nx
import pytest

import brute
from rainbow.cases import procedure1_extend, tree_rainbow_coloring
from rainbow.dominating import build_dominating_tree
from rainbow.families import complete, cycle, example1, example2, example3, random_connected
from rainbow.graph import Graph, blow_up, bridges, diameter
from rainbow.oracles import (BudgetExceeded, clique_cover_number, independence_number, is_independent,
                             is_rainbow_connected, rc_exact)
from rainbow.pipeline import rainbow_color_bounded


def random_batch(count, max_n, seed0=0, need=lambda g: True):
    out, seed = [], seed0
    while len(out) < count:
        g = random_connected(4 + seed % (max_n - 3), [0.2, 0.3, 0.45, 0.6][seed % 4], seed=seed)
        seed += 1
        if need(g):
            out.append(g)
    return out


def _timed(limit, body):
    t0 = time.perf_counter()
    failures, detail = body()
    took = time.perf_counter() - t0
    if took >= limit:
        failures.append(f"took {took:.1f}s, limit {limit}s")
    return failures, f"{detail}; {took:.2f}s"


def crit_example1():
    def body():
        bad = []
        for t in (2, 3, 4):
            for s in (2, 5, 10):
                g = example1(t, s)
                cert = rainbow_color_bounded(g)
                alpha = independence_number(g).alpha
                got = (cert.palette_size <= 2 * t - 1, cert.verdict.connected, diameter(g), alpha)
                if got != (True, True, 2 * t - 1, t):
                    bad.append(f"t={t} s={s}: k={cert.palette_size} diam={got[2]} alpha={alpha}")
                if t == 2:
                    rc = rc_exact(g).rc
                    if not rc == 3 == cert.palette_size:
                        bad.append(f"t=2 s={s}: rc={rc} k={cert.palette_size}")
        return bad, "9 instances"
    return _timed(10, body)


def crit_example2():
    def body():
        bad = []
        for t in (2, 3):
            for s in (2, 4):
                g = example2(t, s)
                cert = rainbow_color_bounded(g)
                alpha = independence_number(g).alpha
                if not (cert.palette_size <= 2 * t - 1 and cert.verdict.connected
                        and diameter(g) == 2 * t - 1 and alpha == t):
                    bad.append(f"t={t} s={s}: k={cert.palette_size} diam={diameter(g)} alpha={alpha}")
        return bad, "4 instances"
    return _timed(10, body)


def crit_example3():
    def body():
        bad = []
        for s in range(4, 9):
            g = example3(s)
            rc = rc_exact(g).rc
            bound = 2 * independence_number(g).alpha - 1
            if (rc, bound) != (3, 2 * s - 1):
                bad.append(f"s={s}: rc={rc} 2a-1={bound}")
        return bad, "s=4..8"
    return _timed(60, body)


def crit_certificates():
    def body():
        bad = []
        for i, g in enumerate(random_batch(200, 12)):
            cert = rainbow_color_bounded(g)
            alpha = independence_number(g).alpha
            if not (is_rainbow_connected(g, cert.coloring).connected and is_independent(g, cert.witness)
                    and cert.palette_size <= 2 * alpha - 1):
                bad.append(f"#{i}: k={cert.palette_size} alpha={alpha} route={cert.route}")
        return bad, "200 graphs"
    return _timed(120, body)


def crit_fresh_colors():
    def body():
        bad = []
        graphs = random_batch(50, 14, seed0=1000, need=lambda g: g.min_degree() >= 2 and not g.is_complete())
        for i, g in enumerate(graphs):
            dt = build_dominating_tree(g)
            inner = tree_rainbow_coloring(g, dt.D, dt.T)
            col = procedure1_extend(g, dt.D, inner, verify=False)
            if not (is_rainbow_connected(g, col).connected and col.k == inner.k + 3):
                bad.append(f"#{i}")
        return bad, "50 instances"
    return _timed(30, body)


def crit_blowup():
    def body():
        bad = []
        graphs = random_batch(30, 8, seed0=3000, need=lambda g: bool(bridges(g)))
        for i, g in enumerate(graphs):
            e = min(bridges(g))
            h, _ = blow_up(g, e)
            before = (independence_number(g).alpha, rc_exact(g).rc)
            after = (independence_number(h).alpha, rc_exact(h).rc)
            if before != after:
                bad.append(f"#{i} n={g.n} bridge={e}: (alpha,rc) {before}->{after}")
        return bad, "30 graphs, lowest-id bridge"
    return _timed(120, body)


def _all_trees(max_n):
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            yield Graph.build(n, list(t.edges))


def crit_baselines():
    def body():
        bad = []
        for n in range(2, 7):
            if rc_exact(complete(n)).rc != 1:
                bad.append(f"K{n}")
        for n in range(4, 9):
            g = cycle(n)
            rc = rc_exact(g).rc
            if rc != brute.rc(n, g.edges) or rc > math.ceil(n / 2):
                bad.append(f"C{n}: rc={rc}")
        trees = list(_all_trees(7))
        for g in trees:
            rc = rc_exact(g).rc
            if not rc == g.n - 1 == brute.rc(g.n, g.edges):
                bad.append(f"tree {g.edges}: rc={rc}")
        return bad, f"K2..K6, C4..C8, {len(trees)} trees"
    return _timed(120, body)


def crit_cover_chain():
    def body():
        bad = []
        pool = [example1(t, s) for t in (2, 3, 4) for s in (2, 5, 10)]
        pool += [example2(t, s) for t in (2, 3) for s in (2, 4)]
        pool += [example3(s) for s in range(4, 9)] + random_batch(200, 12)
        solved = 0
        for i, g in enumerate(pool):
            try:
                chibar = clique_cover_number(g)
                alpha = independence_number(g).alpha
            except BudgetExceeded:
                continue
            solved += 1
            k = rainbow_color_bounded(g).palette_size
            if not k <= 2 * alpha - 1 <= 2 * chibar - 1:
                bad.append(f"#{i}: k={k} alpha={alpha} chibar={chibar}")
        return bad, f"{solved}/{len(pool)} solved"
    return _timed(120, body)


CRITERIA = [
    ("tightness on example1", crit_example1),
    ("tightness on example2", crit_example2),
    ("looseness on example3", crit_example3),
    ("certificate property suite", crit_certificates),
    ("dominating-set extension, three fresh colors", crit_fresh_colors),
    ("blow-up invariance", crit_blowup),
    ("oracle baselines", crit_baselines),
    ("clique cover chain", crit_cover_chain),
]


def report(name, fn):
    failures, detail = fn()
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] {name}: {detail}"
    if failures:
        line += "; " + " | ".join(failures[:6]) + (" ..." if len(failures) > 6 else "")
    return failures, line


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0].replace(",", "").replace(" ", "-") for c in CRITERIA])
def test_criterion(name, fn, capsys):
    failures, line = report(name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


if __name__ == "__main__":
    for name, fn in CRITERIA:
        print(report(name, fn)[1], flush=True)

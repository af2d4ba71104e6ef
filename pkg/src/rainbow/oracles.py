"""Exact brute-force oracles: alpha, rainbow verification, rc, clique cover.

All searches are exponential in the worst case. Each takes a node budget and
raises :class:`BudgetExceeded` rather than returning an approximate answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import ColoringError, EdgeColoring
from .graph import Edge, Graph, GraphError, canon, diameter

MAX_COLORS = 64

DEFAULT_ALPHA_BUDGET = 5_000_000
DEFAULT_RC_BUDGET = 20_000_000
DEFAULT_CHI_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """A search hit its node budget. ``interval`` brackets the true value."""

    def __init__(self, what: str, nodes: int, interval: Optional[tuple] = None):
        self.what = what
        self.nodes = nodes
        self.interval = interval
        msg = f"budget exceeded in {what} after {nodes} nodes"
        if interval is not None:
            msg += f"; value lies in [{interval[0]}, {interval[1]}]"
        super().__init__(msg)


# --- independence number -------------------------------------------------------

@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: tuple[int, ...]
    nodes: int = 0


def is_independent(g: Graph, S) -> bool:
    S = list(S)
    if len(set(S)) != len(S):
        return False
    return not any(g.has_edge(a, b) for i, a in enumerate(S) for b in S[i + 1:])


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def independence_number(g: Graph, budget: int = DEFAULT_ALPHA_BUDGET) -> IndependenceResult:
    """Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex of the remaining candidates (take it
    or drop it); bounds by a greedy clique cover of the candidates. Ties go to
    the lowest vertex id, so the witness is reproducible.
    """
    n = g.n
    nb = [0] * n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    best: list = [0, 0]  # size, set mask
    nodes = 0

    def cover_bound(P: int) -> int:
        # each greedy clique can hold at most one vertex of an independent set
        cliques = 0
        while P:
            v = (P & -P).bit_length() - 1
            cand = P & nb[v]
            P &= ~(1 << v)
            while cand:
                w = (cand & -cand).bit_length() - 1
                P &= ~(1 << w)
                cand &= nb[w]
            cliques += 1
        return cliques

    def rec(P: int, cur: int, size: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("independence_number", nodes, (best[0], n))
        # vertices isolated within P are always taken
        iso = 0
        for v in _bits(P):
            if not (nb[v] & P):
                iso |= 1 << v
        if iso:
            P &= ~iso
            cur |= iso
            size += bin(iso).count("1")
        if not P:
            if size > best[0]:
                best[0], best[1] = size, cur
            return
        if size + cover_bound(P) <= best[0]:
            return
        v = max(_bits(P), key=lambda x: (bin(nb[x] & P).count("1"), -x))
        rec(P & ~nb[v] & ~(1 << v), cur | (1 << v), size + 1)
        rec(P & ~(1 << v), cur, size)

    rec((1 << n) - 1, 0, 0)
    witness = tuple(_bits(best[1]))
    return IndependenceResult(best[0], witness, nodes)


# --- rainbow connectivity --------------------------------------------------------------

@dataclass(frozen=True)
class RainbowVerdict:
    connected: bool
    violations: tuple[tuple[int, int], ...] = ()
    states_explored: int = 0

    def __bool__(self) -> bool:
        return self.connected


def _check_coloring(g: Graph, col: EdgeColoring):
    if col.k > MAX_COLORS:
        raise ColoringError(f"palette k={col.k} exceeds {MAX_COLORS}")
    missing = col.missing_edges(g)
    if missing:
        raise ColoringError(f"coloring is partial; uncolored edges: {missing[:10]}"
                            + (" ..." if len(missing) > 10 else ""))
    extra = col.extra_edges(g)
    if extra:
        raise ColoringError(f"coloring has edges not in the graph: {extra[:10]}")


def rainbow_reach(g: Graph, ecol: dict, source: int) -> tuple[set[int], int]:
    """Vertices joined to ``source`` by a rainbow path, and states explored.

    Searches (vertex, used-color set) states. A state is dropped when some
    already kept state at the same vertex used a subset of its colors: any
    continuation of the larger set is also open to the smaller one. Rainbow
    walks shortcut to rainbow paths, so walk reachability is exact.
    """
    kept: dict[int, list[int]] = {source: [0]}
    reached = {source}
    stack = [(source, 0)]
    states = 1
    target = g.n
    adj = g.adj
    while stack and len(reached) < target:
        u, mask = stack.pop()
        for w in adj[u]:
            bit = ecol[(u, w) if u < w else (w, u)]
            if mask & bit:
                continue
            nm = mask | bit
            lst = kept.get(w)
            if lst is None:
                kept[w] = [nm]
                reached.add(w)
            else:
                if any(old & nm == old for old in lst):
                    continue
                lst[:] = [old for old in lst if old & nm != nm]
                lst.append(nm)
            states += 1
            stack.append((w, nm))
    return reached, states


def is_rainbow_connected(g: Graph, col: EdgeColoring, max_violations: Optional[int] = None) -> RainbowVerdict:
    """Decide whether every vertex pair is joined by a rainbow path."""
    _check_coloring(g, col)
    ecol = {e: 1 << (c - 1) for e, c in col.colors.items()}
    violations = []
    states = 0
    for s in range(g.n):
        reached, st = rainbow_reach(g, ecol, s)
        states += st
        for t in range(s + 1, g.n):
            if t not in reached:
                violations.append((s, t))
        if max_violations is not None and len(violations) >= max_violations:
            break
    return RainbowVerdict(not violations, tuple(violations), states)


# --- exact rainbow connection number -----------------------------------------------------

def _paths_up_to(g: Graph, eidx: dict, max_len: int):
    """All simple paths of length 2..max_len between non-adjacent pairs.

    Returns {pair: [tuple of edge indices]}; paths are listed from the lower
    endpoint only, so each undirected path appears once.
    """
    out: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    n = g.n
    for s in range(n):
        on = [False] * n
        on[s] = True
        stack = [(s, iter(g.adj[s]))]
        edges: list[int] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if on[w]:
                    continue
                e = eidx[canon(u, w)]
                edges.append(e)
                if w > s and len(edges) >= 2 and not g.has_edge(s, w):
                    out.setdefault((s, w), []).append(tuple(edges))
                if len(edges) < max_len:
                    on[w] = True
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                edges.pop()
            if not advanced:
                stack.pop()
                if stack:
                    on[u] = False
                    edges.pop()
    return out


def _search_k(g: Graph, k: int, budget_left: int):
    """Backtracking search for a rainbow coloring with at most k colors.

    Returns (coloring dict or None, nodes). Colors are introduced in
    increasing order only (color c may be used once 1..c-1 have been), which
    removes palette permutations. A pair is dead once every path between its
    ends repeats a color among the already colored edges.
    """
    edges = list(g.edges)
    m = len(edges)
    eidx = {e: i for i, e in enumerate(edges)}
    pair_paths = _paths_up_to(g, eidx, k)
    n = g.n
    far = [(s, t) for s in range(n) for t in range(s + 1, n) if not g.has_edge(s, t)]
    if any(p not in pair_paths for p in far):
        return None, 0
    paths: list[tuple[int, ...]] = []
    owner: list[int] = []
    live: list[int] = []
    for pi, (pair, plist) in enumerate(sorted(pair_paths.items())):
        live.append(len(plist))
        for p in plist:
            paths.append(p)
            owner.append(pi)
    on_edge: list[list[int]] = [[] for _ in range(m)]
    for p_id, p in enumerate(paths):
        for e in p:
            on_edge[e].append(p_id)
    # most constrained edges first: those on many paths of scarce pairs
    weight = [0.0] * m
    for p_id, p in enumerate(paths):
        for e in p:
            weight[e] += 1.0 / live[owner[p_id]]
    order = sorted(range(m), key=lambda e: (-weight[e], e))

    pmask = [0] * len(paths)
    dead = [False] * len(paths)
    color = [0] * m
    nodes = 0

    def assign(e: int, c: int, log: list) -> bool:
        bit = 1 << c
        ok = True
        for p_id in on_edge[e]:
            if dead[p_id]:
                continue
            if pmask[p_id] & bit:
                dead[p_id] = True
                o = owner[p_id]
                live[o] -= 1
                log.append((p_id, -1))
                if live[o] == 0:
                    ok = False
            else:
                pmask[p_id] |= bit
                log.append((p_id, bit))
        return ok

    def undo(log: list):
        for p_id, bit in reversed(log):
            if bit == -1:
                dead[p_id] = False
                live[owner[p_id]] += 1
            else:
                pmask[p_id] ^= bit

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        e = order[i]
        for c in range(min(used + 1, k)):
            nodes += 1
            if nodes > budget_left:
                raise BudgetExceeded("rc_exact", nodes)
            log: list = []
            if assign(e, c, log):
                color[e] = c + 1
                if rec(i + 1, max(used, c + 1)):
                    return True
            undo(log)
        return False

    found = rec(0, 0)
    if not found:
        return None, nodes
    return {edges[i]: color[i] for i in range(m)}, nodes


@dataclass(frozen=True)
class RcResult:
    rc: int
    witness: EdgeColoring
    lower: int
    nodes: int = 0
    verdict: Optional[RainbowVerdict] = field(default=None, compare=False)


def rc_exact(g: Graph, budget: int = DEFAULT_RC_BUDGET, start: Optional[int] = None) -> RcResult:
    """Smallest k admitting a rainbow coloring, by increasing k from diam(G)."""
    if not g.is_connected():
        raise GraphError("rc is undefined for a disconnected graph")
    if g.n <= 1:
        return RcResult(0, EdgeColoring({}, 0), 0)
    lo = diameter(g)
    hi = min(g.m, g.n - 1)  # a spanning tree in distinct colors always works
    k = lo if start is None else max(lo, start)
    used = 0
    while k <= hi:
        try:
            found, nodes = _search_k(g, k, budget - used)
        except BudgetExceeded as ex:
            raise BudgetExceeded("rc_exact", used + ex.nodes, (k, hi)) from None
        used += nodes
        if found is not None:
            col = EdgeColoring(found, k)
            verdict = is_rainbow_connected(g, col)
            if not verdict.connected:
                raise AssertionError(f"rc search produced an unverified coloring at k={k}")
            return RcResult(k, col, lo, used, verdict)
        k += 1
    raise AssertionError("no rainbow coloring up to n-1 colors; search is broken")


# --- clique cover number ---------------------------------------------------------------

def chromatic_number(g: Graph, budget: int = DEFAULT_CHI_BUDGET) -> tuple[int, list[int]]:
    """Exact vertex chromatic number by DSATUR branch and bound.

    Returns (chi, coloring list with colors 0..chi-1).
    """
    n = g.n
    if n == 0:
        return 0, []
    nb = [set(a) for a in g.adj]
    # greedy DSATUR for the initial upper bound
    best_col = _dsatur_greedy(g)
    best = [max(best_col) + 1, best_col]
    # a greedy clique gives a lower bound to stop early
    lb = _greedy_clique_size(g)
    col = [-1] * n
    nodes = 0

    def rec(colored: int, ncol: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("chromatic_number", nodes, (lb, best[0]))
        if ncol >= best[0]:
            return
        if colored == n:
            best[0], best[1] = ncol, col[:]
            return
        # pick uncolored vertex with max saturation, then degree, then low id
        v, vsat = -1, None
        for u in range(n):
            if col[u] != -1:
                continue
            sat = len({col[w] for w in nb[u] if col[w] != -1})
            key = (sat, len(nb[u]), -u)
            if vsat is None or key > vsat:
                v, vsat = u, key
        forbidden = {col[w] for w in nb[v]}
        for c in range(min(ncol + 1, best[0] - 1)):
            if c in forbidden:
                continue
            col[v] = c
            rec(colored + 1, max(ncol, c + 1))
            col[v] = -1
            if best[0] == lb:
                return

    if best[0] > lb:
        rec(0, 0)
    return best[0], best[1]


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    col = [-1] * n
    for _ in range(n):
        v = max((u for u in range(n) if col[u] == -1),
                key=lambda u: (len({col[w] for w in g.adj[u] if col[w] != -1}), len(g.adj[u]), -u))
        used = {col[w] for w in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        col[v] = c
    return col


def _greedy_clique_size(g: Graph) -> int:
    best = 1 if g.n else 0
    for s in range(g.n):
        clique = [s]
        for v in sorted(g.adj[s], key=lambda x: -len(g.adj[x])):
            if all(g.has_edge(v, c) for c in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def clique_cover_number(g: Graph, budget: int = DEFAULT_CHI_BUDGET) -> int:
    """Minimum number of cliques partitioning V(G), i.e. chi of the complement."""
    return chromatic_number(g.complement(), budget)[0]


def clique_cover(g: Graph, budget: int = DEFAULT_CHI_BUDGET) -> list[list[int]]:
    chi, col = chromatic_number(g.complement(), budget)
    return [[v for v in range(g.n) if col[v] == c] for c in range(chi)]

"""Dominating tree construction, neighbourhood classification, and the
independent-set enlargements that let the colorer skip the case analysis."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Edge, Graph, GraphError, canon, neighborhood_at, tree_adjacency, tree_distances, tree_path
from .oracles import is_independent


class PreconditionError(GraphError):
    pass


class ProofGapError(RuntimeError):
    """A construction step produced something its own argument rules out."""

    def __init__(self, msg: str, **state):
        self.state = state
        super().__init__(msg)


@dataclass(frozen=True)
class DominatingTree:
    D: frozenset
    T: tuple[Edge, ...]
    X: frozenset
    Y: frozenset
    knots: frozenset
    seed: int
    rounds: tuple[tuple[int, int, int], ...] = ()  # (v, h, u) per round

    @property
    def tadj(self) -> dict[int, list[int]]:
        try:
            return self.__dict__["_tadj"]
        except KeyError:
            t = tree_adjacency(self.T)
            t.setdefault(self.seed, [])
            object.__setattr__(self, "_tadj", t)
            return t

    def parent(self, v: int) -> Optional[int]:
        """Tree parent (attachment towards the seed)."""
        for vv, h, u in self.rounds:
            if v == vv:
                return h
            if v == h:
                return u
        return None

    def leaves(self) -> list[int]:
        return sorted(v for v, nb in self.tadj.items() if len(nb) == 1)

    def check(self, g: Graph) -> None:
        """Raise AssertionError if any structural invariant fails."""
        assert self.D == self.X | self.Y and not (self.X & self.Y)
        assert len(self.Y) == len(self.X) + 1
        assert is_independent(g, self.Y)
        assert len(self.T) == len(self.D) - 1
        assert set(self.tadj) == set(self.D)
        assert all(g.has_edge(*e) for e in self.T)
        reach = tree_distances(self.tadj, self.seed)
        assert set(reach) == set(self.D)
        assert not neighborhood_at(g, self.D, 2)
        for v in self.leaves():
            if len(self.D) > 1:
                assert v in self.Y, f"pendant vertex {v} not in Y"
        for x in self.knots:
            assert x in self.X and len(self.tadj[x]) >= 3


def build_dominating_tree(g: Graph) -> DominatingTree:
    """Grow a tree D by 2-paths v-h-u (v two steps out) until D dominates G.

    Seed is the lowest-id vertex of minimum degree; each round takes the
    lowest-id v at distance 2, then the lowest-id h joining it to N(D), then
    the lowest-id u in D adjacent to h.
    """
    if g.n == 0 or g.is_complete():
        raise PreconditionError("dominating tree needs a non-complete graph")
    if g.min_degree() < 2:
        raise PreconditionError("dominating tree needs minimum degree >= 2; preprocess bridges first")
    if not g.is_connected():
        raise PreconditionError("graph is disconnected")
    delta = g.min_degree()
    y0 = min(v for v in g.vertices() if g.degree(v) == delta)
    D = {y0}
    X: set[int] = set()
    Y = {y0}
    T: list[Edge] = []
    knots: set[int] = set()
    rounds = []
    while True:
        N2 = neighborhood_at(g, D, 2)
        if not N2:
            break
        v = min(N2)
        N1 = neighborhood_at(g, D, 1)
        h = min(w for w in g.adj[v] if w in N1)
        u = min(w for w in g.adj[h] if w in D)
        if u in X:
            knots.add(u)
        D |= {v, h}
        X.add(h)
        Y.add(v)
        T += [canon(u, h), canon(h, v)]
        rounds.append((v, h, u))
    return DominatingTree(frozenset(D), tuple(sorted(T)), frozenset(X), frozenset(Y),
                          frozenset(knots), y0, tuple(rounds))


def longest_pendant_path(dt: DominatingTree) -> list[int]:
    """A longest leaf-to-leaf path of T, by double sweep from the lowest id."""
    if len(dt.D) < 3:
        raise PreconditionError("longest pendant path needs |D| >= 3")
    tadj = dt.tadj

    def farthest(src):
        dist = tree_distances(tadj, src)
        top = max(dist.values())
        return min(v for v, d in dist.items() if d == top)

    a = farthest(min(dt.D))
    b = farthest(a)
    return tree_path(tadj, a, b)


# --- neighbourhood partition ------------------------------------------------------------

@dataclass
class NeighborhoodPartition:
    """A/B split of N(D); optionally refined against a pendant path.

    ``anchors`` maps refined vertices to their designated D-neighbours:
    one for A1/A2 and B, an ordered pair for A3 (y1, y2) and A4 (w', w'').
    """

    A: frozenset
    B: frozenset
    dnb: dict = field(repr=False)  # w -> sorted D-neighbours
    y1: Optional[int] = None
    y2: Optional[int] = None
    A1: frozenset = frozenset()
    A2: frozenset = frozenset()
    A3: frozenset = frozenset()
    A4: frozenset = frozenset()
    B1: frozenset = frozenset()
    B2: frozenset = frozenset()
    B3: frozenset = frozenset()
    anchors: dict = field(default_factory=dict)

    @property
    def refined(self) -> bool:
        return self.y1 is not None

    def block_of(self, w: int) -> str:
        for name in ("A1", "A2", "A3", "A4", "B1", "B2", "B3"):
            if w in getattr(self, name):
                return name
        return "A" if w in self.A else "B"


def split_neighborhood(g: Graph, D) -> NeighborhoodPartition:
    D = set(D)
    dnb = {}
    for w in g.vertices():
        if w not in D:
            nb = sorted(x for x in g.adj[w] if x in D)
            if nb:
                dnb[w] = nb
    A = frozenset(w for w, nb in dnb.items() if len(nb) >= 2)
    B = frozenset(w for w, nb in dnb.items() if len(nb) == 1)
    return NeighborhoodPartition(A, B, dnb)


def classify_neighborhood(g: Graph, dt: DominatingTree, P: Optional[list[int]] = None) -> NeighborhoodPartition:
    """A/B split, refined into A1..A4, B1..B3 when a pendant path is given.

    Overlaps resolve by priority A4 > A3 > A1 > A2.
    """
    part = split_neighborhood(g, dt.D)
    if P is None:
        return part
    y1, y2 = P[0], P[-1]
    dist1 = tree_distances(dt.tadj, y1)
    blocks = {k: set() for k in ("A1", "A2", "A3", "A4", "B1", "B2", "B3")}
    anchors = {}
    for w in sorted(part.A):
        nb = part.dnb[w]
        others = [x for x in nb if x not in (y1, y2)]
        if len(others) >= 2:
            a, b = others[0], others[1]
            if (dist1[b], b) < (dist1[a], a):
                a, b = b, a
            blocks["A4"].add(w)
            anchors[w] = (a, b)
        elif not others:
            blocks["A3"].add(w)
            anchors[w] = (y1, y2)
        elif y1 in nb:
            blocks["A1"].add(w)
            anchors[w] = others[0]
        else:
            blocks["A2"].add(w)
            anchors[w] = others[0]
    for w in sorted(part.B):
        (d,) = part.dnb[w]
        if d not in dt.Y:
            raise ProofGapError(f"B-vertex {w} is adjacent to X-vertex {d}; the e(w,Y)=0 shortcut should have applied",
                                vertex=w, anchor=d)
        key = "B1" if d == y1 else "B2" if d == y2 else "B3"
        blocks[key].add(w)
        anchors[w] = d
    return NeighborhoodPartition(part.A, part.B, part.dnb, y1, y2,
                                 **{k: frozenset(v) for k, v in blocks.items()}, anchors=anchors)


# --- enlarged independent sets ----------------------------------------------------------

@dataclass(frozen=True)
class Enlargement:
    I: frozenset
    lemma: str  # "lemma2" | "lemma3" | "lemma4" | "swap"
    detail: tuple = ()


def _tree_is_induced(g: Graph, dt: DominatingTree) -> bool:
    return len(g.induced_edges(dt.D)) == len(dt.T)


def find_enlarged_independent_set(g: Graph, dt: DominatingTree, part: Optional[NeighborhoodPartition] = None,
                                  extended: bool = True) -> Optional[Enlargement]:
    """Look for an independent set of size |Y|+1 near the dominating tree.

    Tries, in order: a neighbour with no Y-neighbour; two non-adjacent
    single-anchor neighbours (tree path swap); two non-adjacent neighbours
    with the same two D-neighbours. With ``extended``, finally tries every
    vertex or non-adjacent pair of N(D) with a maximum independent set of
    what remains of T (exact on trees). Every returned set is re-verified.
    """
    if part is None:
        part = split_neighborhood(g, dt.D)
    Y = set(dt.Y)
    target = len(Y) + 1

    def accept(I, lemma, detail=()):
        I = set(I)
        if not is_independent(g, I) or len(I) < target:
            return None
        return Enlargement(frozenset(sorted(I)[:target] if len(I) > target else I), lemma, detail)

    N1 = sorted(part.dnb)
    # no Y-neighbour at all
    for w in N1:
        if not any(d in Y for d in part.dnb[w]):
            res = accept(Y | {w}, "lemma2", (w,))
            if res is None:
                raise ProofGapError("Y + w is not independent", lemma="lemma2", w=w)
            return res

    # the tree-path swaps are proved for G[D] = T; with chords they are only
    # candidates, kept when the independence re-check passes
    tree_only = _tree_is_induced(g, dt)
    single = [w for w in N1 if len(part.dnb[w]) == 1 and part.dnb[w][0] in Y]
    for i, w in enumerate(single):
        for w2 in single[i + 1:]:
            if g.has_edge(w, w2):
                continue
            res = _lemma3(g, dt, w, part.dnb[w][0], w2, part.dnb[w2][0], accept)
            if res is not None:
                return res
            if tree_only:
                raise ProofGapError("tree-path swap failed for a non-adjacent single-anchor pair",
                                    lemma="lemma3", pair=(w, w2))
    pairs = [w for w in N1 if len(part.dnb[w]) == 2]
    for i, w in enumerate(pairs):
        for w2 in pairs[i + 1:]:
            if g.has_edge(w, w2) or part.dnb[w] != part.dnb[w2]:
                continue
            res = _lemma4(g, dt, w, w2, part.dnb[w], accept)
            if res is not None:
                return res
            if tree_only:
                raise ProofGapError("tree-path swap failed for a non-adjacent twin pair",
                                    lemma="lemma4", pair=(w, w2), anchors=tuple(part.dnb[w]))
    if extended:
        return _swap_search(g, dt, part, accept)
    return None


def _lemma3(g, dt, w, y, w2, y2, accept):
    X, Y = set(dt.X), set(dt.Y)
    path = tree_path(dt.tadj, y, y2)
    if not any(path[i] in X and path[i + 1] in X for i in range(len(path) - 1)):
        I = {w, w2} | {v for v in path if v in X} | (Y - set(path))
        return accept(I, "lemma3", (w, w2))
    for seq, start_w in ((path, w), (path[::-1], w2)):
        for i in range(len(seq) - 1):
            a, b = seq[i], seq[i + 1]
            if a in X and b in X:
                if dt.parent(a) == b:
                    seg = seq[: i + 1]
                    I = {start_w} | {v for v in seg if v in X} | (Y - set(seg))
                    res = accept(I, "lemma3", (w, w2, "knot"))
                    if res is not None:
                        return res
                break
    return None


def _lemma4(g, dt, w1, w2, anchors, accept):
    """Twin pair w1, w2 with N(w)∩D = {p, q}.

    Swap along the tree path p..q: interior X in, path Y out, endpoints out.
    With consecutive X on the path, swap only up to the knot segment from one
    end and also drop the far endpoint.
    """
    X, Y = set(dt.X), set(dt.Y)
    p, q = anchors
    path = tree_path(dt.tadj, p, q)
    if not any(path[i] in X and path[i + 1] in X for i in range(len(path) - 1)):
        I = {w1, w2} | {v for v in path[1:-1] if v in X} | (Y - set(path))
        return accept(I, "lemma4", (w1, w2))
    for seq in (path, path[::-1]):
        for i in range(len(seq) - 1):
            a, b = seq[i], seq[i + 1]
            if a in X and b in X:
                if dt.parent(a) == b:
                    seg = seq[: i + 1]
                    I = {w1, w2} | {v for v in seg[1:] if v in X} | (Y - set(seg) - {seq[-1]})
                    res = accept(I, "lemma4", (w1, w2, "knot"))
                    if res is not None:
                        return res
                break
    return None


def _tree_mis(tadj: dict[int, list[int]], alive: set[int]) -> set[int]:
    """Maximum independent set of the forest T[alive] (leaf-up DP, low ids preferred)."""
    out: set[int] = set()
    seen: set[int] = set()
    for root in sorted(alive):
        if root in seen:
            continue
        order, parent = [], {root: None}
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            order.append(u)
            for w in tadj.get(u, ()):
                if w in alive and w not in seen:
                    seen.add(w)
                    parent[w] = u
                    stack.append(w)
        take, skip = {}, {}
        for u in reversed(order):
            kids = [w for w in tadj.get(u, ()) if parent.get(w) == u]
            take[u] = 1 + sum(skip[c] for c in kids)
            skip[u] = sum(max(take[c], skip[c]) for c in kids)
        # reconstruct top-down
        chosen = {}
        for u in order:
            p = parent[u]
            if p is not None and chosen[p]:
                chosen[u] = False
            else:
                chosen[u] = take[u] >= skip[u]
        out |= {u for u, c in chosen.items() if c}
    return out


def _swap_search(g, dt, part, accept):
    """One or two vertices of N(D) plus a maximum independent set of T minus
    their D-neighbours. Exact when G[D] = T; with chords the candidate is
    only kept if it is still independent in G."""
    N1 = sorted(part.dnb)
    D = set(dt.D)
    need = len(dt.Y) + 1
    for w in N1:
        rest = _tree_mis(dt.tadj, D - set(part.dnb[w]))
        if len(rest) + 1 >= need:
            res = accept(rest | {w}, "swap", (w,))
            if res is not None:
                return res
    for i, w in enumerate(N1):
        for w2 in N1[i + 1:]:
            if g.has_edge(w, w2):
                continue
            rest = _tree_mis(dt.tadj, D - set(part.dnb[w]) - set(part.dnb[w2]))
            if len(rest) + 2 >= need:
                res = accept(rest | {w, w2}, "swap", (w, w2))
                if res is not None:
                    return res
    return None

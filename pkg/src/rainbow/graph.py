"""Immutable simple undirected graphs and the structural primitives built on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]

INF = float("inf")


class GraphError(ValueError):
    """Invalid graph input or a violated structural precondition."""


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj`` holds sorted neighbour tuples and ``edges`` the sorted canonical
    edge list. Build instances with :func:`from_edge_list` or
    :meth:`Graph.build`, never by filling fields by hand.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def build(cls, n: int, pairs: Iterable[Sequence[int]], labels=None) -> "Graph":
        es = set()
        for p in pairs:
            u, v = int(p[0]), int(p[1])
            if u == v:
                raise GraphError(f"self-loop at {(u, v)}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            es.add(canon(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("label count does not match vertex count")
        return cls(n, tuple(sorted(es)), tuple(tuple(sorted(a)) for a in nbrs), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def _adjsets(self) -> tuple[frozenset, ...]:
        # cached lazily; the dataclass is frozen so go through object.__setattr__
        try:
            return self.__dict__["_adjsets_cache"]
        except KeyError:
            sets = tuple(frozenset(a) for a in self.adj)
            object.__setattr__(self, "_adjsets_cache", sets)
            return sets

    def neighbors(self, v: int) -> frozenset:
        return self._adjsets[v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INF for d in distances(self, 0))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def edges_between(self, U: Iterable[int], W: Iterable[int]) -> list[Edge]:
        """E[U, W]: edges with one end in U and the other in W."""
        U, W = set(U), set(W)
        out = set()
        for u in U:
            for w in self.adj[u]:
                if w in W and w != u:
                    out.add(canon(u, w))
        return sorted(out)

    def induced_edges(self, U: Iterable[int]) -> list[Edge]:
        U = set(U)
        return [e for e in self.edges if e[0] in U and e[1] in U]

    def complement(self) -> "Graph":
        pairs = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if not self.has_edge(u, v)]
        return Graph.build(self.n, pairs, self.labels)

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph.build(self.n, list(self.edges) + list(extra), self.labels)

    def without_edge(self, e: Edge) -> "Graph":
        e = canon(*e)
        return Graph.build(self.n, [f for f in self.edges if f != e], self.labels)

    def degree_sequence(self) -> list[int]:
        return [len(a) for a in self.adj]


def from_edge_list(pairs: Iterable[Sequence], n: Optional[int] = None) -> Graph:
    """Build a graph from vertex-id pairs.

    With ``n`` given, vertices are ``0..n-1`` and isolated vertices are
    allowed. Otherwise the vertex set is the union of endpoints; integer ids
    already forming ``0..max`` are kept, anything else is relabelled in
    sorted order and the original ids are stored as labels.
    Connectivity is reported by :meth:`Graph.is_connected`.
    """
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2:
            raise GraphError(f"not a pair: {p!r}")
        if p[0] == p[1]:
            raise GraphError(f"self-loop in input: {p!r}")
    if n is not None:
        return Graph.build(n, pairs)
    ids = sorted({x for p in pairs for x in p}, key=lambda x: (str(type(x)), x))
    if all(isinstance(x, int) for x in ids) and ids == list(range(len(ids))):
        return Graph.build(len(ids), pairs)
    index = {x: i for i, x in enumerate(ids)}
    return Graph.build(len(ids), [(index[a], index[b]) for a, b in pairs],
                       labels=[str(x) for x in ids])


# --- distances --------------------------------------------------------------

def distances(g: Graph, source) -> list:
    """BFS distances from a vertex, or from a vertex set (distance to the set).

    Unreachable vertices get ``INF``.
    """
    srcs = [source] if isinstance(source, int) else list(source)
    dist: list = [INF] * g.n
    q = deque()
    for s in srcs:
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                q.append(w)
    return dist


def eccentricity(g: Graph, v: int):
    return max(distances(g, v), default=0)


def diameter(g: Graph):
    return max((eccentricity(g, v) for v in g.vertices()), default=0)


def radius(g: Graph):
    return min((eccentricity(g, v) for v in g.vertices()), default=0)


def neighborhood_at(g: Graph, D: Iterable[int], k: int) -> set[int]:
    """N^k(D): vertices at distance exactly k from the set D."""
    dist = distances(g, list(D))
    return {v for v in g.vertices() if dist[v] == k}


# --- bridges ------------------------------------------------------------------

def bridges(g: Graph) -> set[Edge]:
    """Cut edges, by iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[Edge] = set()
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # frame: (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    out.add(canon(parent, u))
    return out


# --- blow-up ------------------------------------------------------------------

@dataclass(frozen=True)
class BlowUp:
    """Provenance of a blow-up: which bridge, which vertices were added."""

    original_n: int
    edge: Edge
    new_vertices: tuple[int, ...]


def blow_up(g: Graph, cut_edge: Edge, q: int = 1) -> tuple[Graph, BlowUp]:
    """Replace the bridge ``uv`` by a clique on ``{u, v, w_1..w_q}``.

    New vertices take ids ``n..n+q-1``; every original edge is kept.
    """
    u, v = canon(*cut_edge)
    if q < 1:
        raise GraphError("blow-up needs q >= 1")
    if (u, v) not in bridges(g):
        raise GraphError(f"{(u, v)} is not a cut edge")
    new = tuple(range(g.n, g.n + q))
    clique = (u, v) + new
    extra = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    labels = None
    if g.labels is not None:
        labels = g.labels + tuple(f"w{u}_{v}_{i}" for i in range(q))
    h = Graph.build(g.n + q, list(g.edges) + extra, labels)
    return h, BlowUp(g.n, (u, v), new)


# --- spanning trees -------------------------------------------------------------

def spanning_tree(g: Graph, subset: Optional[Iterable[int]] = None,
                  prefer: Iterable[Edge] = ()) -> list[Edge]:
    """BFS spanning tree of G[subset] (lowest-id root and neighbour order).

    Edges listed in ``prefer`` are taken first (Kruskal order), so passing a
    tree that already spans the subset returns that tree unchanged.
    """
    S = sorted(set(range(g.n)) if subset is None else set(subset))
    if not S:
        return []
    Sset = set(S)
    parent = {v: v for v in S}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: list[Edge] = []
    for e in prefer:
        a, b = canon(*e)
        if a in Sset and b in Sset and g.has_edge(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                tree.append((a, b))
    # BFS fill-in keeps trees shallow and deterministic
    seen = {S[0]}
    q = deque([S[0]])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if w in Sset and w not in seen:
                seen.add(w)
                q.append(w)
                ra, rb = find(u), find(w)
                if ra != rb:
                    parent[ra] = rb
                    tree.append(canon(u, w))
    if len(seen) != len(S):
        raise GraphError("induced subgraph on subset is disconnected")
    # remaining edges only matter when `prefer` fragments were not BFS-adjacent
    for a, b in g.induced_edges(Sset):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.append((a, b))
    return sorted(tree)


def tree_adjacency(tree_edges: Iterable[Edge]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for a, b in tree_edges:
        out.setdefault(a, []).append(b)
        out.setdefault(b, []).append(a)
    for v in out:
        out[v].sort()
    return out


def tree_path(tadj: dict[int, list[int]], a: int, b: int) -> list[int]:
    """Unique path from a to b in a tree given as adjacency dict."""
    if a == b:
        return [a]
    prev = {a: None}
    q = deque([a])
    while q:
        u = q.popleft()
        if u == b:
            break
        for w in tadj.get(u, ()):
            if w not in prev:
                prev[w] = u
                q.append(w)
    if b not in prev:
        raise GraphError(f"{a} and {b} are not connected in the tree")
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def tree_distances(tadj: dict[int, list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in tadj.get(u, ()):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist

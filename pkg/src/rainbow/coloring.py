"""Edge colorings and the flat-file formats for graphs and colorings."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .graph import Edge, Graph, GraphError, canon


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Total map edge -> color in ``1..k``.

    ``k`` is the declared palette. With ``surjective=True`` every color in
    ``1..k`` must actually be used.
    """

    colors: Mapping[Edge, int]
    k: int
    surjective: bool = False

    def __post_init__(self):
        fixed = {canon(*e): int(c) for e, c in self.colors.items()}
        object.__setattr__(self, "colors", fixed)
        bad = {e: c for e, c in fixed.items() if not 1 <= c <= self.k}
        if bad:
            raise ColoringError(f"colors outside 1..{self.k}: {sorted(bad.items())[:5]}")
        if self.surjective and self.used() != set(range(1, self.k + 1)):
            raise ColoringError("declared surjective but some colors unused")

    def __getitem__(self, e: Edge) -> int:
        return self.colors[canon(*e)]

    def used(self) -> set[int]:
        return set(self.colors.values())

    def missing_edges(self, g: Graph) -> list[Edge]:
        return [e for e in g.edges if e not in self.colors]

    def extra_edges(self, g: Graph) -> list[Edge]:
        es = set(g.edges)
        return sorted(e for e in self.colors if e not in es)

    def restrict(self, edges: Iterable[Edge]) -> "EdgeColoring":
        return EdgeColoring({e: self.colors[canon(*e)] for e in edges}, self.k)

    def compact(self) -> "EdgeColoring":
        """Renumber used colors to 1..len(used), preserving order."""
        remap = {c: i + 1 for i, c in enumerate(sorted(self.used()))}
        return EdgeColoring({e: remap[c] for e, c in self.colors.items()}, len(remap), True)


# --- edge-list format -------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """``u v`` per line; ``#`` comments; optional ``p <n> <m>`` header."""
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or pairs:
                raise GraphError(f"line {lineno}: header must come first and only once")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: header is 'p <n> <m>'")
            header = (int(parts[1]), int(parts[2]))
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop {(u, v)}")
        pairs.append((u, v))
    if header is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
        return Graph.build(n, pairs)
    n, m = header
    g = Graph.build(n, pairs)
    if g.m != m:
        raise GraphError(f"header declares m={m} but {g.m} distinct edges were read")
    return g


def format_edge_list(g: Graph, comment: str = "") -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"p {g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_graph(g: Graph, path, comment: str = "") -> None:
    Path(path).write_text(format_edge_list(g, comment))


# --- coloring format ---------------------------------------------------------------

def parse_coloring(text: str) -> EdgeColoring:
    """``c k=<k>`` header then one ``u v c`` triple per line."""
    k = None
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            if len(parts) != 2 or not parts[1].startswith("k="):
                raise ColoringError(f"line {lineno}: header is 'c k=<k>'")
            k = int(parts[1][2:])
            continue
        if len(parts) != 3:
            raise ColoringError(f"line {lineno}: expected 'u v c', got {line!r}")
        u, v, c = map(int, parts)
        e = canon(u, v)
        if e in colors:
            raise ColoringError(f"line {lineno}: edge {e} colored twice")
        colors[e] = c
    if k is None:
        raise ColoringError("missing 'c k=<k>' header")
    return EdgeColoring(colors, k)


def format_coloring(col: EdgeColoring) -> str:
    lines = [f"c k={col.k}"]
    lines += [f"{u} {v} {c}" for (u, v), c in sorted(col.colors.items())]
    return "\n".join(lines) + "\n"


def read_coloring(path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def write_coloring(col: EdgeColoring, path) -> None:
    Path(path).write_text(format_coloring(col))

"""Graph family generators, including the three extremal examples.

Vertex id layouts (so tests can name vertices deterministically):

* ``example1(t, s)``: path ``v_1..v_{2t}`` is ``0..2t-1``; then the clique
  ``G_1`` (2 vertices), then ``G_2..G_t`` (``s`` vertices each). ``G_i`` is
  joined to ``v_{2i-1}, v_{2i}`` (ids ``2i-2, 2i-1``).
* ``example2(t, s)``: blocks ``V_1..V_{2t}`` consecutively, sizes
  ``2, 2, s, ..., s``; each block is a clique joined completely to the next.
* ``example3(s)``: ``K_{1,1,s}`` with the two singleton parts at ``0, 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError

RANDOM_DRAW_CAP = 10_000


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}:{args}" if args else self.name


def parse_family(text: str) -> FamilySpec:
    """Parse ``name`` or ``name:k=v,k=v`` (e.g. ``example1:t=3,s=4``)."""
    name, _, rest = text.strip().partition(":")
    params = {}
    for part in filter(None, rest.split(",")):
        k, eq, v = part.partition("=")
        if not eq:
            raise GraphError(f"bad family parameter {part!r}")
        params[k.strip()] = float(v) if k.strip() == "p" else int(v)
    return FamilySpec(name.strip(), params)


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def _clique(ids):
    return [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph.build(n, _clique(list(range(n))))


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    _need(n >= 1, "star needs n >= 1 leaves")
    return Graph.build(n + 1, [(0, i) for i in range(1, n + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


def example1(t: int, s: int) -> Graph:
    _need(t >= 2, "example1 needs t >= 2")
    _need(s >= 2, "example1 needs s >= 2")
    pairs = [(i, i + 1) for i in range(2 * t - 1)]
    nxt = 2 * t
    for i in range(1, t + 1):
        size = 2 if i == 1 else s
        block = list(range(nxt, nxt + size))
        nxt += size
        pairs += _clique(block)
        for w in block:
            pairs += [(w, 2 * i - 2), (w, 2 * i - 1)]
    return Graph.build(nxt, pairs)


def example2_blocks(t: int, s: int) -> list[list[int]]:
    sizes = [2, 2] + [s] * (2 * t - 2)
    blocks, nxt = [], 0
    for size in sizes:
        blocks.append(list(range(nxt, nxt + size)))
        nxt += size
    return blocks


def example2(t: int, s: int) -> Graph:
    _need(t >= 2, "example2 needs t >= 2")
    _need(s >= 2, "example2 needs s >= 2")
    blocks = example2_blocks(t, s)
    pairs = []
    for i, b in enumerate(blocks):
        pairs += _clique(b)
        if i + 1 < len(blocks):
            pairs += [(u, w) for u in b for w in blocks[i + 1]]
    return Graph.build(blocks[-1][-1] + 1, pairs)


def example3(s: int) -> Graph:
    _need(s > 3, "example3 needs s > 3")
    pairs = [(0, 1)] + [(p, v) for p in (0, 1) for v in range(2, s + 2)]
    return Graph.build(s + 2, pairs)


def random_connected(n: int, p: float, seed: int, cap: int = RANDOM_DRAW_CAP) -> Graph:
    """Erdős–Rényi G(n, p), redrawn from one seeded stream until connected."""
    _need(n >= 1, "random_connected needs n >= 1")
    _need(0.0 <= p <= 1.0, "random_connected needs 0 <= p <= 1")
    rng = random.Random(seed)
    for _ in range(cap):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.build(n, pairs)
        if g.is_connected():
            return g
    raise GraphError(f"no connected draw within {cap} attempts (n={n}, p={p})")


FAMILIES = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "star": (star, ("n",)),
    "petersen": (petersen, ()),
    "example1": (example1, ("t", "s")),
    "example2": (example2, ("t", "s")),
    "example3": (example3, ("s",)),
    "random": (random_connected, ("n", "p", "seed")),
    "random_connected": (random_connected, ("n", "p", "seed")),
}


def generate_family(spec, **params) -> Graph:
    """Build a family member from a :class:`FamilySpec`, a spec string, or a name plus keywords."""
    if isinstance(spec, str):
        spec = parse_family(spec) if not params else FamilySpec(spec, params)
    elif params:
        spec = FamilySpec(spec.name, {**spec.params, **params})
    if spec.name not in FAMILIES:
        raise GraphError(f"unknown family {spec.name!r}; known: {sorted(FAMILIES)}")
    fn, names = FAMILIES[spec.name]
    missing = [k for k in names if k not in spec.params]
    extra = [k for k in spec.params if k not in names]
    if missing or extra:
        raise GraphError(f"{spec.name} takes parameters {names}; missing {missing}, unexpected {extra}")
    return fn(**{k: spec.params[k] for k in names})

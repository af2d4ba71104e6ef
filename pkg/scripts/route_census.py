"""Run the constructive colorer over seeded random graphs and tally proof routes.

Counts which branch produced each certificate, how often the bridge
restriction needed fresh colors, and checks every palette against the exact
2*alpha - 1. With --no-fallback, case failures are reported instead of
being rescued by an exact independent set.

    python scripts/route_census.py --count 5000 --max-n 14
"""

import argparse
import collections
import random
import time

from rainbow.dominating import ProofGapError
from rainbow.families import random_connected
from rainbow.oracles import independence_number
from rainbow.pipeline import rainbow_color_bounded

DENSITIES = [0.15, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--no-fallback", action="store_true")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    routes, notes = collections.Counter(), collections.Counter()
    gaps = collections.defaultdict(list)
    over = []
    t0 = time.perf_counter()
    for i in range(args.count):
        n = rng.randint(args.min_n, args.max_n)
        p = rng.choice(DENSITIES)
        seed = 10_000 + i
        g = random_connected(n, p, seed=seed)
        try:
            cert = rainbow_color_bounded(g, alpha_fallback=not args.no_fallback)
        except ProofGapError as ex:
            gaps[str(ex).split(":")[0]].append((n, p, seed))
            continue
        routes[cert.route] += 1
        notes.update(cert.notes)
        alpha = independence_number(g).alpha
        if not cert.valid or cert.palette_size > 2 * alpha - 1:
            over.append((n, p, seed, cert.palette_size, alpha))

    print(f"{args.count} graphs in {time.perf_counter() - t0:.1f}s")
    for route, c in sorted(routes.items(), key=lambda x: -x[1]):
        print(f"route {route:14s} {c}")
    for note, c in notes.items():
        print(f"note  {note}: {c}")
    for gap, cases in gaps.items():
        print(f"gap   {gap}: {len(cases)} e.g. {cases[:3]}")
    print(f"over budget or invalid: {len(over)} {over[:5]}")


if __name__ == "__main__":
    main()

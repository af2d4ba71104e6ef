"""Bound-comparison tables for the three extremal families.

    python scripts/family_sweep.py --out results/
"""

import argparse
from pathlib import Path

from rainbow.report import ReportConfig, sweep_report

SWEEPS = {
    "example1": ["example1:t=2..4,s=2/5/10"],
    "example2": ["example2:t=2..3,s=2/4"],
    "example3": ["example3:s=4..8"],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--rc-budget", type=int, default=2_000_000)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    cfg = ReportConfig(rc_budget=args.rc_budget, jobs=args.jobs)
    for name, sweeps in SWEEPS.items():
        rep = sweep_report(sweeps, cfg)
        (args.out / f"{name}.txt").write_text(rep.to_text())
        (args.out / f"{name}.json").write_text(rep.to_json())
        print(rep.to_text())


if __name__ == "__main__":
    main()

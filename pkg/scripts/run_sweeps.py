#!/usr/bin/env python3
"""Run the classification verification across a range of groups and print a
summary table.

Usage:
    python3 scripts/run_sweeps.py [--max-cyclic N] [--jobs J]
"""

import argparse
import os

from zerosum.classify import verify_theorem
from zerosum.group import GroupSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-cyclic", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    groups = [GroupSpec([n]) for n in range(2, args.max_cyclic + 1)]
    groups += [GroupSpec(o) for o in ([2, 2], [3, 3], [2, 2, 2], [2, 4], [2, 6])]

    header = f"{'group':>10} {'total':>9} {'reps':>7} {'qual':>5} {'matched':>7} {'ok':>4} {'ms':>8}"
    print(header)
    print("-" * len(header))
    for G in groups:
        rep = verify_theorem(G, jobs=args.jobs)
        print(
            f"{G.spec_string():>10} {rep.total:>9} {rep.representatives:>7} "
            f"{rep.qualifying:>5} {rep.matched:>7} {str(rep.ok):>4} {rep.elapsed_ms:>8.0f}"
        )


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Tabulate the Davenport constant for small abelian groups, alongside the
classical lower bound 1 + sum(n_i - 1) for the invariant-factor decomposition.

Usage:
    python3 scripts/davenport_table.py [--max-order N]
"""

import argparse
import math
from collections import defaultdict

from zerosum.bounds import davenport
from zerosum.group import abelian_groups_up_to


def invariant_factors(orders: list[int]) -> list[int]:
    by_prime: defaultdict[int, list[int]] = defaultdict(list)
    for n in orders:
        m = n
        for p in range(2, n + 1):
            if p * p > m:
                break
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            if q > 1:
                by_prime[p].append(q)
        if m > 1:
            by_prime[m].append(m)
    for powers in by_prime.values():
        powers.sort(reverse=True)
    rank = max((len(v) for v in by_prime.values()), default=0)
    factors = [
        math.prod(v[k] for v in by_prime.values() if k < len(v)) for k in range(rank)
    ]
    return sorted(factors)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=12)
    args = ap.parse_args()

    print(f"{'group':>12} {'|G|':>5} {'D(G)':>5} {'1+sum(n_i-1)':>13}")
    for G in abelian_groups_up_to(args.max_order):
        d = davenport(G)
        lower = 1 + sum(n - 1 for n in invariant_factors(G.orders))
        star = "" if d == lower else "  *"
        print(f"{G.spec_string():>12} {G.n:>5} {d:>5} {lower:>13}{star}")


if __name__ == "__main__":
    main()

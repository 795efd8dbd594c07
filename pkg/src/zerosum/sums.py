"""The subsequence-sum engine.

Computes the full table  length -> set of achievable subsequence sums  with a
bounded-multiplicity DP over bitmask rows, plus a brute-force subset
enumeration oracle kept deliberately independent of the DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import BudgetExceededError, InvariantViolation
from .group import GroupSpec, _CHUNK
from .sequences import Sequence

BRUTE_FORCE_MAX_TERMS = 24


def compute_rows(G: GroupSpec, mult: tuple[int, ...]) -> list[int]:
    """Rows of the sum table for a raw multiplicity vector.  rows[l] is the
    bitmask of sums of length-l subsequences; rows[0] = {0}."""
    L = sum(mult)
    rows = [0] * (L + 1)
    rows[0] = 1
    cur = 0
    for g, m in enumerate(mult):
        if not m:
            continue
        tabs = G.translation_tables(g)
        nch = len(tabs)
        for _ in range(m):
            # one new copy of g: downward pass so the copy is used at most once
            if nch == 1:
                t0 = tabs[0]
                for l in range(cur, -1, -1):
                    r = rows[l]
                    if r:
                        rows[l + 1] |= t0[r]
            else:
                for l in range(cur, -1, -1):
                    r = rows[l]
                    if r:
                        acc = 0
                        for c in range(nch):
                            acc |= tabs[c][(r >> (c * _CHUNK)) & 0xFF]
                        rows[l + 1] |= acc
            cur += 1
    return rows


def sigma_of_mult(G: GroupSpec, mult: tuple[int, ...]) -> int:
    acc = 0
    for g, m in enumerate(mult):
        if m:
            acc = G.add(acc, G.scalar_mul(m, g))
    return acc


def check_complement(G: GroupSpec, rows: list[int], sig: int) -> None:
    """Assert row m = sigma - row (L - m) for every m; raises on violation."""
    L = len(rows) - 1
    tabs = G.sub_from_tables(sig)
    nch = len(tabs)
    for m in range(L + 1):
        r = rows[L - m]
        acc = 0
        for c in range(nch):
            acc |= tabs[c][(r >> (c * _CHUNK)) & 0xFF]
        if acc != rows[m]:
            raise InvariantViolation(
                f"complement identity failed at length {m} of {L}"
            )


@dataclass(frozen=True)
class SumsByLength:
    group: GroupSpec
    rows: tuple[int, ...]  # rows[l] = bitmask of sums over length-l subsequences
    sigma: int

    @property
    def length(self) -> int:
        return len(self.rows) - 1

    def row(self, ell: int) -> int:
        return self.rows[ell]

    def cardinalities(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def zero_lengths(self) -> frozenset[int]:
        """Lengths l >= 1 with 0 in the row (the nontrivial convention)."""
        return frozenset(l for l in range(1, len(self.rows)) if self.rows[l] & 1)

    def window(self, lo: int, hi: int) -> int:
        if not 1 <= lo <= hi <= self.length:
            raise ValueError(f"window [{lo}, {hi}] invalid for length {self.length}")
        out = 0
        for l in range(lo, hi + 1):
            out |= self.rows[l]
        return out

    def full_sumset(self) -> int:
        """Sigma(S): sums over all nonempty subsequences."""
        return self.window(1, self.length) if self.length else 0


@dataclass(frozen=True)
class ZeroSumProfile:
    lengths: frozenset[int]
    unique_r: Optional[int]


def sums_by_length(S: Sequence, check: bool = True) -> SumsByLength:
    rows = compute_rows(S.group, S.mult)
    sig = sigma_of_mult(S.group, S.mult)
    if check:
        check_complement(S.group, rows, sig)
    return SumsByLength(S.group, tuple(rows), sig)


def zero_sum_profile(S: Sequence) -> ZeroSumProfile:
    lengths = sums_by_length(S).zero_lengths()
    return ZeroSumProfile(lengths, next(iter(lengths)) if len(lengths) == 1 else None)


def sigma_window(S: Sequence, lo: int, hi: int) -> int:
    return sums_by_length(S).window(lo, hi)


def brute_force_sums(S: Sequence, ell: int, max_terms: int = BRUTE_FORCE_MAX_TERMS) -> int:
    """Independent oracle: the length-``ell`` sum row by explicit subset
    enumeration over the term-expanded sequence."""
    terms = S.terms()
    if len(terms) > max_terms:
        raise BudgetExceededError(
            f"brute-force oracle capped at {max_terms} terms, got {len(terms)}"
        )
    if not 0 <= ell <= len(terms):
        raise ValueError("subsequence length out of range")
    G = S.group
    out = 0
    for combo in combinations(range(len(terms)), ell):
        acc = 0
        for i in combo:
            acc = G.add(acc, terms[i])
        out |= 1 << acc
    return out

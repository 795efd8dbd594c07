"""The classification of length-|G| sequences whose nontrivial zero-sum
subsequences all share one length: family generation, matching, and the
exhaustive biconditional sweep.

Family tags
-----------
CYC_GPOW        g^(n-1) g'                      g a generator, g' arbitrary
CYC_2GPOW       (2g)^(n-1) g''                  n even, g'' outside <2g>
CYC_ODD_SQUARE  g^(n-2) ((n+1)/2 g)^2           n odd
CYC_MOD4        (2g)^(n/2+x) ((n+4)/2 g)^(n/2-x)  n = 2 mod 4, x even
CYC_EVEN_HALF   g^(n/2+x) ((n+2)/2 g)^(n/2-x)   n even, n/2 - x odd
NC_GPOW         g^(n-1) g'                      ord(g) = n/2, g' outside <g>
NC_HG           g^(n/2+x) (h+g)^(n/2-x)         ord(h) = 2, x odd
NC_HQG          g^(n/2+x) (h + (n+4)/4 g)^(n/2-x)  ord(h) = 2, x odd
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import BudgetExceededError
from .group import GroupSpec, automorphisms, cyclic_subgroup
from .sequences import (
    DEFAULT_MULTISET_BUDGET,
    Sequence,
    iter_mult_vectors,
    orbit_min,
)
from .sums import check_complement, compute_rows, sigma_of_mult, zero_sum_profile


@dataclass(frozen=True)
class FamilyInstance:
    tag: str
    g: int
    aux: Optional[int]  # g', g'' or the order-2 element h, per tag
    x: Optional[int]
    r: int  # predicted unique zero-sum length
    mult: tuple[int, ...]

    def sequence(self, G: GroupSpec) -> Sequence:
        return Sequence(G, self.mult)

    def describe(self, G: GroupSpec) -> dict:
        return {
            "tag": self.tag,
            "g": G.format_element(self.g),
            "aux": None if self.aux is None else G.format_element(self.aux),
            "x": self.x,
            "r": self.r,
            "sequence": Sequence(G, self.mult).to_text(),
        }


def _mult_of(G: GroupSpec, pairs: list[tuple[int, int]]) -> tuple[int, ...]:
    mult = [0] * G.n
    for g, m in pairs:
        mult[g] += m
    return tuple(mult)


def _dlog(G: GroupSpec, base: int, target: int) -> Optional[int]:
    """Least k >= 0 with k * base = target, or None."""
    acc = 0
    for k in range(G.order_of(base)):
        if acc == target:
            return k
        acc = G.add(acc, base)
    return None


def c2x2m_decomposition(G: GroupSpec) -> Optional[tuple[int, int]]:
    """A pair (h, g) with ord(h) = 2, ord(g) = n/2 and h outside <g>, if G is
    (isomorphic to) the non-cyclic order-n group with a cyclic index-2 part."""
    n = G.n
    if n % 4 or G.is_cyclic():
        return None
    for g in G.elements():
        if G.order_of(g) != n // 2:
            continue
        sub = cyclic_subgroup(G, g)
        for h in G.elements():
            if G.order_of(h) == 2 and not (sub >> h) & 1:
                return (h, g)
    return None


def enumerate_families(G: GroupSpec) -> list[FamilyInstance]:
    """Every family member over every valid parameter choice.  Duplicate
    realized sequences across families and parameters are all retained."""
    n = G.n
    out: list[FamilyInstance] = []

    if G.is_cyclic():
        for g in G.generators() or [0]:
            for gp in G.elements():
                # the one zero-sum uses n - a copies of g (a = dlog of g')
                a = _dlog(G, g, gp)
                r = 1 if a == 0 else n - a + 1
                out.append(
                    FamilyInstance("CYC_GPOW", g, gp, None, r, _mult_of(G, [(g, n - 1), (gp, 1)]))
                )
            if n % 2 == 0:
                g2 = G.scalar_mul(2, g)
                sub2 = cyclic_subgroup(G, g2)
                for gpp in G.elements():
                    if (sub2 >> gpp) & 1:
                        continue
                    out.append(
                        FamilyInstance(
                            "CYC_2GPOW", g, gpp, None, n // 2,
                            _mult_of(G, [(g2, n - 1), (gpp, 1)]),
                        )
                    )
            if n % 2 == 1 and n >= 3:
                h = G.scalar_mul((n + 1) // 2, g)
                out.append(
                    FamilyInstance(
                        "CYC_ODD_SQUARE", g, h, None, (n + 1) // 2,
                        _mult_of(G, [(g, n - 2), (h, 2)]),
                    )
                )
            if n % 4 == 2:
                g2 = G.scalar_mul(2, g)
                h = G.scalar_mul((n + 4) // 2, g)
                for x in range(0, n // 2, 2):
                    out.append(
                        FamilyInstance(
                            "CYC_MOD4", g, h, x, n // 2,
                            _mult_of(G, [(g2, n // 2 + x), (h, n // 2 - x)]),
                        )
                    )
            if n % 2 == 0:
                h = G.scalar_mul((n + 2) // 2, g)
                for x in range(n // 2):
                    if (n // 2 - x) % 2 == 1:
                        out.append(
                            FamilyInstance(
                                "CYC_EVEN_HALF", g, h, x, n // 2,
                                _mult_of(G, [(g, n // 2 + x), (h, n // 2 - x)]),
                            )
                        )
        return out

    if c2x2m_decomposition(G) is None:
        return out  # no qualifying sequences exist over other non-cyclic groups

    half = n // 2
    for g in G.elements():
        if G.order_of(g) != half:
            continue
        sub = cyclic_subgroup(G, g)
        for gp in G.elements():
            if (sub >> gp) & 1:
                continue
            out.append(
                FamilyInstance("NC_GPOW", g, gp, None, half, _mult_of(G, [(g, n - 1), (gp, 1)]))
            )
        q = G.scalar_mul((n + 4) // 4, g)
        for h in G.elements():
            if G.order_of(h) != 2 or (sub >> h) & 1:
                continue
            for x in range(1, half, 2):
                out.append(
                    FamilyInstance(
                        "NC_HG", g, h, x, half,
                        _mult_of(G, [(g, half + x), (G.add(h, g), half - x)]),
                    )
                )
                out.append(
                    FamilyInstance(
                        "NC_HQG", g, h, x, half,
                        _mult_of(G, [(g, half + x), (G.add(h, q), half - x)]),
                    )
                )
    return out


_FAMILY_CACHE: dict[tuple[int, ...], tuple[list[FamilyInstance], dict]] = {}


def family_index(G: GroupSpec) -> dict[tuple[int, ...], list[FamilyInstance]]:
    cached = _FAMILY_CACHE.get(G.orders)
    if cached is None:
        instances = enumerate_families(G)
        index: dict[tuple[int, ...], list[FamilyInstance]] = {}
        for inst in instances:
            index.setdefault(inst.mult, []).append(inst)
        cached = _FAMILY_CACHE[G.orders] = (instances, index)
    return cached[1]


def match_family(S: Sequence) -> list[FamilyInstance]:
    """All family instances whose realized sequence equals S."""
    if S.length != S.group.n:
        raise ValueError("only sequences of length |G| can be matched")
    return list(family_index(S.group).get(S.mult, ()))


def qualifying_sequences(
    G: GroupSpec, up_to_automorphism: bool = True
) -> Iterator[tuple[Sequence, int]]:
    """Stream (S, r) for every length-n multiset with a unique zero-sum length."""
    perms = automorphisms(G) if up_to_automorphism else None
    for mult in iter_mult_vectors(G.n, G.n):
        if perms is not None and not orbit_min(mult, perms):
            continue
        rows = compute_rows(G, mult)
        lengths = [l for l in range(1, G.n + 1) if rows[l] & 1]
        if len(lengths) == 1:
            yield Sequence(G, mult), lengths[0]


@dataclass
class VerificationReport:
    group: str
    total: int
    representatives: int
    qualifying: int
    matched: int
    mismatches: list = field(default_factory=list)
    support_violations: list = field(default_factory=list)
    families: int = 0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.support_violations

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "group": self.group,
            "total": self.total,
            "representatives": self.representatives,
            "qualifying": self.qualifying,
            "matched": self.matched,
            "mismatches": self.mismatches,
            "support_violations": self.support_violations,
            "families": self.families,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _sweep_partition(args) -> tuple:
    """Scan all length-L multisets whose leading multiplicity is fixed.
    Module-level so it can be dispatched to worker processes."""
    orders, L, first, perms, family_keys = args
    G = GroupSpec(orders)
    n = G.n
    scanned = reps = qualifying = matched = 0
    mismatches: list[dict] = []
    support_violations: list[dict] = []
    if n == 1:
        inner: Iterator[tuple[int, ...]] = iter([()] if first == L else [])
    else:
        inner = iter_mult_vectors(n - 1, L - first)
    for rest in inner:
        mult = (first,) + rest
        scanned += 1
        if perms is not None and not orbit_min(mult, perms):
            continue
        reps += 1
        rows = compute_rows(G, mult)
        check_complement(G, rows, sigma_of_mult(G, mult))
        lengths = [l for l in range(1, L + 1) if rows[l] & 1]
        if len(lengths) != 1:
            continue
        qualifying += 1
        seq = Sequence(G, mult)
        support = seq.support()
        if len(support) > 2:
            support_violations.append(
                {
                    "sequence": seq.to_text(),
                    "lengths": lengths,
                    "support": [G.format_element(s) for s in support],
                }
            )
        if mult in family_keys:
            matched += 1
        else:
            mismatches.append(
                {
                    "kind": "qualifying_unmatched",
                    "sequence": seq.to_text(),
                    "lengths": lengths,
                    "support": [G.format_element(s) for s in support],
                }
            )
    return scanned, reps, qualifying, matched, mismatches, support_violations


def verify_theorem(
    G: GroupSpec,
    up_to_automorphism: bool = True,
    jobs: int = 1,
    budget: int = DEFAULT_MULTISET_BUDGET,
) -> VerificationReport:
    """Exhaustively sweep all length-n multisets over G, checking the forward
    implication (unique zero-sum length => support <= 2 and family membership)
    and, conversely, that every generated family instance realizes its
    predicted unique zero-sum length."""
    n = G.n
    total_expected = math.comb(2 * n - 1, n)
    if total_expected > budget:
        raise BudgetExceededError(
            f"{total_expected} multisets exceeds the sweep budget of {budget}"
        )
    start = time.perf_counter()
    instances = enumerate_families(G)
    family_keys = frozenset(inst.mult for inst in instances)
    perms = automorphisms(G) if up_to_automorphism else None

    report = VerificationReport(
        group=G.spec_string(),
        total=0,
        representatives=0,
        qualifying=0,
        matched=0,
        families=len(instances),
    )

    # converse direction: each instance must qualify with its predicted r
    seen: set[tuple[int, ...]] = set()
    for inst in instances:
        if inst.mult in seen:
            continue
        seen.add(inst.mult)
        profile = zero_sum_profile(Sequence(G, inst.mult))
        if profile.unique_r != inst.r:
            report.mismatches.append(
                {
                    "kind": "family_not_qualifying",
                    "tag": inst.tag,
                    "sequence": Sequence(G, inst.mult).to_text(),
                    "lengths": sorted(profile.lengths),
                    "predicted_r": inst.r,
                }
            )

    tasks = [(G.orders, n, first, perms, family_keys) for first in range(n, -1, -1)]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_sweep_partition, tasks)
    else:
        results = [_sweep_partition(t) for t in tasks]

    for scanned, reps, qualifying, matched, mismatches, violations in results:
        report.total += scanned
        report.representatives += reps
        report.qualifying += qualifying
        report.matched += matched
        report.mismatches.extend(mismatches)
        report.support_violations.extend(violations)

    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report

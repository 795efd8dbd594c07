"""Implication oracles for the three structural lemmas.

Each oracle walks a bounded parameter space, tests the lemma's hypothesis
extensionally (both sides of every set condition are computed, never derived
from the proof), and reports vacuous / hypothesis-satisfying /
conclusion-holding / counterexample counts.
"""

from __future__ import annotations

from .group import GroupSpec, cyclic_subgroup, mask_of
from .sequences import Sequence, iter_mult_vectors
from .sums import compute_rows, sigma_of_mult, zero_sum_profile

DEFAULT_LEMMA31_MAX_LEN = 6


def _report(G: GroupSpec, total: int, satisfying: int, holding: int, cex: list) -> dict:
    return {
        "group": G.spec_string(),
        "total": total,
        "vacuous": total - satisfying,
        "satisfying": satisfying,
        "holding": holding,
        "counterexamples": cex,
        "ok": not cex,
    }


def check_lemma31(G: GroupSpec, max_len: int = DEFAULT_LEMMA31_MAX_LEN) -> dict:
    """For every g and every nontrivial R with |R| <= min(max_len, ord(g)-1):
    if all nonempty subsequence sums of R lie in {g, 2g, ..., |R|g} and
    sigma(R) = |R|g, then R must be g^|R|."""
    n = G.n
    # share the multiset enumeration (and its sums) across all g
    by_length: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for length in range(1, min(max_len, n - 1 if n > 1 else 0) + 1):
        by_length[length] = [
            (mult, sigma_of_mult(G, mult)) for mult in iter_mult_vectors(n, length)
        ]

    total = satisfying = holding = 0
    cex = []
    for g in G.elements():
        limit = min(max_len, G.order_of(g) - 1)
        allowed = 0
        target = 0
        for length in range(1, limit + 1):
            target = G.add(target, g)  # length * g
            allowed |= 1 << target
            for mult, sig in by_length[length]:
                total += 1
                if sig != target:
                    continue
                rows = compute_rows(G, mult)
                sums_all = 0
                for l in range(1, length + 1):
                    sums_all |= rows[l]
                if sums_all & ~allowed:
                    continue
                satisfying += 1
                if mult[g] == length:
                    holding += 1
                else:
                    cex.append({"g": g, "R": Sequence(G, mult).to_text()})
    return _report(G, total, satisfying, holding, cex)


def check_lemma32(n: int) -> dict:
    """Over C_n, for every generator g, every h, every l >= n-l >= 1 with
    S = g^l h^(n-l): if the nonempty subsequence sums of h^(n-l) form
    {g, ..., (n-l-1)g} plus at most one extra element, and S has a unique
    zero-sum length, then S = g^(n-1) h, or n is odd with h = (n+1)/2 * g and
    S = g^(n-2) h^2."""
    G = GroupSpec([n])
    total = satisfying = holding = 0
    cex = []
    for g in G.generators():
        for h in G.elements():
            for l in range((n + 1) // 2, n):
                total += 1
                m = n - l  # number of h terms, 1 <= m <= l
                # sums of h^m are exactly {h, 2h, ..., mh}
                M = mask_of(G.scalar_mul(i, h) for i in range(1, m + 1))
                P = mask_of(G.scalar_mul(i, g) for i in range(1, m))
                if P & ~M or M.bit_count() > P.bit_count() + 1:
                    continue
                mult = [0] * n
                mult[g] += l
                mult[h] += m
                S = Sequence(G, tuple(mult))
                if zero_sum_profile(S).unique_r is None:
                    continue
                satisfying += 1
                goal1 = [0] * n
                goal1[g] += n - 1
                goal1[h] += 1
                ok = S.mult == tuple(goal1)
                if not ok and n % 2 == 1 and h == G.scalar_mul((n + 1) // 2, g):
                    goal2 = [0] * n
                    goal2[g] += n - 2
                    goal2[h] += 2
                    ok = S.mult == tuple(goal2)
                if ok:
                    holding += 1
                else:
                    cex.append({"g": g, "h": h, "l": l, "S": S.to_text()})
    return _report(G, total, satisfying, holding, cex)


def check_lemma33(G: GroupSpec) -> dict:
    """For |G| = n even, every g of order n/2, every h != g, every l >= n/2
    with n-l >= 2 and S = g^l h^(n-l): if S has n/2 as its unique zero-sum
    length, then n-l is odd, h lies outside <g>, and 2h = 2g."""
    n = G.n
    if n % 2:
        raise ValueError("lemma applies to groups of even order")
    total = satisfying = holding = 0
    cex = []
    half = n // 2
    for g in G.elements():
        if G.order_of(g) != half:
            continue
        gen_mask = cyclic_subgroup(G, g)
        for h in G.elements():
            if h == g:
                continue
            for l in range(half, n - 1):
                total += 1
                mult = [0] * n
                mult[g] += l
                mult[h] += n - l
                S = Sequence(G, tuple(mult))
                if zero_sum_profile(S).unique_r != half:
                    continue
                satisfying += 1
                conclusion = (
                    (n - l) % 2 == 1
                    and not (gen_mask >> h) & 1
                    and G.scalar_mul(2, h) == G.scalar_mul(2, g)
                )
                if conclusion:
                    holding += 1
                else:
                    cex.append({"g": g, "h": h, "l": l, "S": S.to_text()})
    return _report(G, total, satisfying, holding, cex)

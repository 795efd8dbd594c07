"""Brute-force oracles and inequality checkers: Davenport constant, the
representation-count proposition, Cauchy-Davenport, and the stabilizer-based
lower bound on per-length subsequence sums.

Every checker returns a structured report (both sides of each inequality and
witnesses for failures) so sweep logs stay auditable.
"""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from .errors import BudgetExceededError
from .group import (
    GroupSpec,
    coset_labels,
    iter_bits,
    members,
    rep_count,
    stabilizer,
    sumset,
)
from .sequences import Sequence, orbit_min
from .group import automorphisms
from .sums import sums_by_length

DAVENPORT_MAX_CYCLIC = 20
DAVENPORT_MAX_NONCYCLIC = 16


def _zero_sum_free_dfs(
    G: GroupSpec, max_len: int, collect_len: Optional[int] = None
) -> tuple[int, list[tuple[int, ...]]]:
    """DFS over zero-sum-free multisets by nondecreasing element index, pruning
    as soon as 0 becomes an achievable nonempty subsequence sum."""
    n = G.n
    best = 0
    found: list[tuple[int, ...]] = []
    mult = [0] * n

    def rec(start: int, sums: int, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        if collect_len is not None and depth == collect_len:
            found.append(tuple(mult))
            return
        if depth == max_len:
            return
        for g in range(start, n):
            if g == 0:
                continue  # 0 is itself a zero-sum of length 1
            new = sums | G.translate(sums | 1, g)
            if new & 1:
                continue
            mult[g] += 1
            rec(g, new, depth + 1)
            mult[g] -= 1

    rec(1, 0, 0)
    return best, found


def davenport(G: GroupSpec) -> int:
    """Minimal d such that every sequence of length >= d has a nontrivial
    zero-sum subsequence; 1 + the longest zero-sum-free length."""
    cap = DAVENPORT_MAX_CYCLIC if G.is_cyclic() else DAVENPORT_MAX_NONCYCLIC
    if G.n > cap:
        raise BudgetExceededError(
            f"davenport search capped at order {cap} for {G.spec_string()}"
        )
    best, _ = _zero_sum_free_dfs(G, max_len=G.n)
    return best + 1


def check_davenport_upper(G: GroupSpec) -> bool:
    return davenport(G) <= G.n


def zero_sum_free_of_length(
    G: GroupSpec, length: int, up_to_automorphism: bool = False
) -> list[Sequence]:
    """All zero-sum-free sequences of exactly the given length."""
    if length == 0:
        return [Sequence.empty(G)]
    _, found = _zero_sum_free_dfs(G, max_len=length, collect_len=length)
    if up_to_automorphism:
        perms = automorphisms(G)
        found = [m for m in found if orbit_min(m, perms)]
    return [Sequence(G, m) for m in found]


# -- Proposition on representation counts --------------------------------------


def check_prop21(G: GroupSpec, A: int, B: int) -> dict:
    """Evaluate both representation-count implications at their maximal
    applicable k: (i) from |A+B| <= |A|+|B|-k, (ii) from |A|+|B| >= |G|+k."""
    if not A or not B:
        raise ValueError("A and B must be nonempty")
    AB = sumset(G, A, B)
    size_a, size_b, size_ab = A.bit_count(), B.bit_count(), AB.bit_count()
    violations = []

    k1 = size_a + size_b - size_ab
    if k1 >= 1:
        for x in iter_bits(AB):
            r = rep_count(G, A, B, x)
            if r < k1:
                violations.append({"part": "i", "x": x, "reps": r, "k": k1})

    k2 = size_a + size_b - G.n
    if k2 >= 1:
        for x in G.elements():
            r = rep_count(G, A, B, x)
            if r < k2:
                violations.append({"part": "ii", "x": x, "reps": r, "k": k2})

    return {
        "group": G.spec_string(),
        "sizes": {"A": size_a, "B": size_b, "A+B": size_ab},
        "k_i": k1,
        "k_ii": k2,
        "violations": violations,
        "ok": not violations,
    }


def prop21_exhaustive(G: GroupSpec) -> dict:
    """Run the proposition over every nonempty pair (A, B); numpy-backed
    representation counting so order-8 groups stay fast."""
    n = G.n
    sub_table = np.array(
        [[G.sub(x, a) for x in range(n)] for a in range(n)], dtype=np.intp
    )
    member_lists = {}
    failures = []
    pairs = 0
    for A in range(1, 1 << n):
        la = member_lists.get(A)
        if la is None:
            la = member_lists[A] = members(A)
        rows = sub_table[la]
        for B in range(1, 1 << n):
            pairs += 1
            b_ind = np.zeros(n, dtype=np.int64)
            for b in iter_bits(B):
                b_ind[b] = 1
            counts = b_ind[rows].sum(axis=0)
            size_a = len(la)
            size_b = B.bit_count()
            ab = counts > 0
            size_ab = int(ab.sum())
            k1 = size_a + size_b - size_ab
            k2 = size_a + size_b - n
            if k1 >= 1 and int(counts[ab].min()) < k1:
                failures.append({"A": A, "B": B, "part": "i"})
            if k2 >= 1 and int(counts.min()) < k2:
                failures.append({"A": A, "B": B, "part": "ii"})
    return {"group": G.spec_string(), "pairs": pairs, "failures": failures, "ok": not failures}


# -- Cauchy-Davenport ----------------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_cauchy_davenport(p: int, sets: list[int]) -> dict:
    """Verify |A_1 + ... + A_k| >= min(sum |A_i| - k + 1, p) over C_p."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not sets or any(not s for s in sets):
        raise ValueError("all sets must be nonempty")
    G = GroupSpec([p])
    acc = sets[0]
    for s in sets[1:]:
        acc = sumset(G, acc, s)
    lhs = acc.bit_count()
    bound = min(sum(s.bit_count() for s in sets) - len(sets) + 1, p)
    return {
        "p": p,
        "set_sizes": [s.bit_count() for s in sets],
        "lhs": lhs,
        "bound": bound,
        "ok": lhs >= bound,
    }


def cd_exhaustive(p: int) -> dict:
    """All nonempty pairs (A, B) over C_p."""
    failures = []
    pairs = 0
    for A in range(1, 1 << p):
        for B in range(1, 1 << p):
            pairs += 1
            rep = check_cauchy_davenport(p, [A, B])
            if not rep["ok"]:
                failures.append({"A": A, "B": B})
    return {"p": p, "pairs": pairs, "failures": failures, "ok": not failures}


def cd_random_trials(p: int, trials: int, seed: int, max_sets: int = 4) -> dict:
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        k = rng.randint(1, max_sets)
        sets = []
        for _ in range(k):
            size = rng.randint(1, p)
            sets.append(sum(1 << x for x in rng.sample(range(p), size)))
        rep = check_cauchy_davenport(p, sets)
        if not rep["ok"]:
            failures.append({"trial": t, "sets": sets})
    return {"p": p, "trials": trials, "seed": seed, "failures": failures, "ok": not failures}


# -- stabilizer-based lower bound on |Sigma_l(S)| ------------------------------


def dgm_check(S: Sequence, ell: int) -> dict:
    """Check |Sigma_l(S)| against the coset-aggregated lower bound obtained
    from the stabilizer H of Sigma_l(S)."""
    if not 1 <= ell <= S.length:
        raise ValueError("length index out of range")
    G = S.group
    table = sums_by_length(S)
    A = table.row(ell)
    H = stabilizer(G, A)
    labels = coset_labels(G, H)
    counts = S.counts_by(lambda g: labels[g], G.n // H.bit_count())
    bound = (sum(min(ell, c) for c in counts) - ell + 1) * H.bit_count()
    lhs = A.bit_count()
    return {
        "group": G.spec_string(),
        "sequence": S.to_text(),
        "ell": ell,
        "lhs": lhs,
        "bound": bound,
        "stabilizer_size": H.bit_count(),
        "ok": lhs >= bound,
    }


def dgm_random_trials(G: GroupSpec, trials: int, seed: int) -> dict:
    """Random (S, l) campaign; trial inputs are drawn up front from the seed so
    results do not depend on how evaluation is scheduled."""
    rng = random.Random(seed)
    inputs = []
    for _ in range(trials):
        length = rng.randint(1, min(2 * G.n, 16))
        terms = [rng.randrange(G.n) for _ in range(length)]
        ell = rng.randint(1, length)
        inputs.append((terms, ell))
    failures = []
    for t, (terms, ell) in enumerate(inputs):
        rep = dgm_check(Sequence.from_terms(G, terms), ell)
        if not rep["ok"]:
            failures.append({"trial": t, "sequence": rep["sequence"], "ell": ell})
    return {
        "group": G.spec_string(),
        "trials": trials,
        "seed": seed,
        "failures": failures,
        "ok": not failures,
    }

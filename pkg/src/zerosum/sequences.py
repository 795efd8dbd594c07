"""Multisets ("sequences") over a finite abelian group.

A sequence is stored as a multiplicity vector indexed by canonical element
index.  All operations are pure; sequences are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import BudgetExceededError
from .group import GroupSpec, automorphisms

DEFAULT_MULTISET_BUDGET = 20_000_000


@dataclass(frozen=True)
class Sequence:
    group: GroupSpec
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mult) != self.group.n:
            raise ValueError("multiplicity vector length must equal the group order")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def empty(cls, G: GroupSpec) -> "Sequence":
        return cls(G, (0,) * G.n)

    @classmethod
    def from_pairs(cls, G: GroupSpec, pairs: Iterable[tuple[int, int]]) -> "Sequence":
        mult = [0] * G.n
        for g, m in pairs:
            G.check_element(g)
            if m < 0:
                raise ValueError("negative multiplicity")
            mult[g] += m
        return cls(G, tuple(mult))

    @classmethod
    def from_terms(cls, G: GroupSpec, terms: Iterable[int]) -> "Sequence":
        return cls.from_pairs(G, ((g, 1) for g in terms))

    @property
    def length(self) -> int:
        return sum(self.mult)

    def support(self) -> tuple[int, ...]:
        return tuple(g for g, m in enumerate(self.mult) if m)

    def max_multiplicity(self) -> int:
        return max(self.mult, default=0)

    def multiplicity(self, g: int) -> int:
        self.group.check_element(g)
        return self.mult[g]

    def sigma(self) -> int:
        """The sum of all terms; 0 for the empty sequence."""
        G = self.group
        acc = 0
        for g, m in enumerate(self.mult):
            if m:
                acc = G.add(acc, G.scalar_mul(m, g))
        return acc

    def divides(self, other: "Sequence") -> bool:
        """True when self is a subsequence of other (pointwise <=)."""
        self._same_group(other)
        return all(a <= b for a, b in zip(self.mult, other.mult))

    def remove(self, sub: "Sequence") -> "Sequence":
        self._same_group(sub)
        if not sub.divides(self):
            raise ValueError("can only remove a subsequence")
        return Sequence(self.group, tuple(a - b for a, b in zip(self.mult, sub.mult)))

    def concat(self, other: "Sequence") -> "Sequence":
        self._same_group(other)
        return Sequence(self.group, tuple(a + b for a, b in zip(self.mult, other.mult)))

    __mul__ = concat

    def terms(self) -> list[int]:
        out: list[int] = []
        for g, m in enumerate(self.mult):
            out.extend([g] * m)
        return out

    def push_map(self, f: Callable[[int], int]) -> "Sequence":
        """Apply an element map G -> G termwise; multiplicities aggregate."""
        mult = [0] * self.group.n
        for g, m in enumerate(self.mult):
            if m:
                y = f(g)
                self.group.check_element(y)
                mult[y] += m
        return Sequence(self.group, tuple(mult))

    def counts_by(self, label_of: Callable[[int], int], nlabels: int) -> tuple[int, ...]:
        """Aggregate multiplicities by an arbitrary labelling (e.g. cosets)."""
        out = [0] * nlabels
        for g, m in enumerate(self.mult):
            if m:
                out[label_of(g)] += m
        return tuple(out)

    def to_text(self) -> str:
        if self.length == 0:
            return "-"
        atoms = []
        for g, m in enumerate(self.mult):
            if not m:
                continue
            e = self.group.format_element(g)
            atoms.append(e if m == 1 else f"{e}^{m}")
        return ",".join(atoms)

    def _same_group(self, other: "Sequence") -> None:
        if self.group != other.group:
            raise ValueError("sequences over different groups")


def iter_mult_vectors(slots: int, total: int) -> Iterator[tuple[int, ...]]:
    """All multiplicity vectors of given length summing to ``total``, with the
    leading coordinate descending."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    buf = [0] * slots

    def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == slots - 1:
            buf[i] = rem
            yield tuple(buf)
            return
        for v in range(rem, -1, -1):
            buf[i] = v
            yield from rec(i + 1, rem - v)

    yield from rec(0, total)


def orbit_min(mult: tuple[int, ...], perms: list[tuple[int, ...]]) -> bool:
    """True when ``mult`` is the lexicographic minimum of its orbit under the
    given index permutations (which must form a group)."""
    for p in perms:
        if tuple(mult[p[i]] for i in range(len(mult))) < mult:
            return False
    return True


def enumerate_multisets(
    G: GroupSpec,
    length: int,
    up_to_automorphism: bool = False,
    budget: int = DEFAULT_MULTISET_BUDGET,
) -> Iterator[Sequence]:
    """Stream every multiset of the given length over G, each exactly once.

    With ``up_to_automorphism`` only the lexicographically minimal
    representative of each automorphism orbit is emitted.
    """
    total = math.comb(G.n + length - 1, length)
    if total > budget:
        raise BudgetExceededError(
            f"{total} multisets exceeds the enumeration budget of {budget}"
        )
    perms = automorphisms(G) if up_to_automorphism else None
    for mult in iter_mult_vectors(G.n, length):
        if perms is not None and not orbit_min(mult, perms):
            continue
        yield Sequence(G, mult)

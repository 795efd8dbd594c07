"""Arithmetic for finite abelian groups given as direct sums of cyclic factors.

Elements are canonical integer indices in [0, n) obtained by mixed-radix
encoding of their coordinate vectors (first factor most significant, so for a
single cyclic factor the index *is* the residue).  Sets of elements are plain
Python ints used as bitmasks over indices: membership is a shift, and
translation by a fixed element is a table-driven permutation of bits, which is
what keeps the subsequence-sum engine fast.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, Iterator

from .errors import BudgetExceededError

_CHUNK = 8  # bits per lookup chunk when permuting a bitmask

DEFAULT_AUTOMORPHISM_BOUND = 16


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def _perm_chunk_tables(perm: list[int], n: int) -> list[list[int]]:
    """Precompute chunkwise lookup tables applying ``perm`` to an n-bit mask."""
    nchunks = (n + _CHUNK - 1) // _CHUNK
    tables = []
    for c in range(nchunks):
        base = c * _CHUNK
        width = min(_CHUNK, n - base)
        tab = [0] * (1 << width)
        for m in range(1, 1 << width):
            low = m & -m
            tab[m] = tab[m ^ low] | (1 << perm[base + low.bit_length() - 1])
        tables.append(tab)
    return tables


class GroupSpec:
    """A finite abelian group ``C_{m1} + ... + C_{mk}`` on indices [0, n)."""

    __slots__ = ("orders", "n", "_weights", "_trans", "_subfrom", "_neg_perm")

    def __init__(self, orders: Iterable[int]):
        orders = tuple(int(m) for m in orders)
        if any(m < 2 for m in orders):
            raise ValueError("cyclic factor moduli must be >= 2")
        self.orders = orders
        self.n = math.prod(orders)
        weights = []
        w = 1
        for m in reversed(orders):
            weights.append(w)
            w *= m
        self._weights = tuple(reversed(weights))
        self._trans: dict[int, list[list[int]]] = {}
        self._subfrom: dict[int, list[list[int]]] = {}
        self._neg_perm: list[int] | None = None

    # -- identity / formatting -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupSpec) and self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        return f"GroupSpec({list(self.orders)})"

    def spec_string(self) -> str:
        if not self.orders:
            return "C1"
        return "x".join(f"C{m}" for m in self.orders)

    def format_element(self, a: int) -> str:
        if len(self.orders) <= 1:
            return str(a)
        return "(" + ",".join(str(c) for c in self.decode(a)) + ")"

    # -- element codec ---------------------------------------------------------

    def encode(self, coords: Iterable[int]) -> int:
        coords = tuple(coords)
        if len(coords) != len(self.orders):
            raise ValueError("coordinate arity mismatch")
        out = 0
        for c, m, w in zip(coords, self.orders, self._weights):
            if not 0 <= c < m:
                raise ValueError(f"coordinate {c} out of range for modulus {m}")
            out += c * w
        return out

    def decode(self, a: int) -> tuple[int, ...]:
        self.check_element(a)
        return tuple((a // w) % m for m, w in zip(self.orders, self._weights))

    def check_element(self, a: int) -> None:
        if not 0 <= a < self.n:
            raise ValueError(f"element index {a} out of range for {self.spec_string()}")

    def elements(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- group law -------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        out = 0
        for m, w in zip(self.orders, self._weights):
            out += ((a // w + b // w) % m) * w
        return out

    def neg(self, a: int) -> int:
        self.check_element(a)
        out = 0
        for m, w in zip(self.orders, self._weights):
            out += (-(a // w) % m) * w
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar_mul(self, k: int, a: int) -> int:
        self.check_element(a)
        out = 0
        for m, w in zip(self.orders, self._weights):
            out += (k * (a // w) % m) * w
        return out

    def order_of(self, a: int) -> int:
        self.check_element(a)
        out = 1
        for m, w in zip(self.orders, self._weights):
            d = (a // w) % m
            out = math.lcm(out, m // math.gcd(d, m))
        return out

    def generators(self) -> list[int]:
        return [g for g in self.elements() if self.order_of(g) == self.n]

    def is_cyclic(self) -> bool:
        return self.n == 1 or bool(self.generators())

    # -- mask permutations -----------------------------------------------------

    def translation_tables(self, g: int) -> list[list[int]]:
        tabs = self._trans.get(g)
        if tabs is None:
            perm = [self.add(g, x) for x in range(self.n)]
            tabs = _perm_chunk_tables(perm, self.n)
            self._trans[g] = tabs
        return tabs

    def translate(self, mask: int, g: int) -> int:
        """The set mask shifted by g: {g + x : x in mask}."""
        tabs = self.translation_tables(g)
        out = 0
        for c, tab in enumerate(tabs):
            out |= tab[(mask >> (c * _CHUNK)) & 0xFF]
        return out

    def neg_mask(self, mask: int) -> int:
        """{-x : x in mask}."""
        if self._neg_perm is None:
            self._neg_perm = [self.neg(x) for x in range(self.n)]
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self._neg_perm[x]
        return out

    def sub_from_tables(self, s: int) -> list[list[int]]:
        """Chunk tables for the permutation x -> s - x (cached per s)."""
        tabs = self._subfrom.get(s)
        if tabs is None:
            perm = [self.sub(s, x) for x in range(self.n)]
            tabs = _perm_chunk_tables(perm, self.n)
            self._subfrom[s] = tabs
        return tabs

    def sub_from(self, mask: int, s: int) -> int:
        """{s - x : x in mask}."""
        tabs = self.sub_from_tables(s)
        out = 0
        for c, tab in enumerate(tabs):
            out |= tab[(mask >> (c * _CHUNK)) & 0xFF]
        return out


# -- set-level operations ------------------------------------------------------


def sumset(G: GroupSpec, A: int, B: int) -> int:
    if not A or not B:
        raise ValueError("sumset of an empty set is undefined")
    out = 0
    for b in iter_bits(B):
        out |= G.translate(A, b)
    return out


def rep_count(G: GroupSpec, A: int, B: int, x: int) -> int:
    """Number of pairs (a, b) in A x B with a + b = x."""
    if not A or not B:
        raise ValueError("rep_count over an empty set is undefined")
    count = 0
    for a in iter_bits(A):
        if (B >> G.sub(x, a)) & 1:
            count += 1
    return count


def stabilizer(G: GroupSpec, A: int) -> int:
    if not A:
        raise ValueError("stabilizer of the empty set is undefined")
    out = 0
    for g in G.elements():
        if G.translate(A, g) == A:
            out |= 1 << g
    return out


def cyclic_subgroup(G: GroupSpec, a: int) -> int:
    out = 1  # identity
    x = a
    while not out >> x & 1:
        out |= 1 << x
        x = G.add(x, a)
    return out


def is_subgroup(G: GroupSpec, H: int) -> bool:
    if not H & 1:
        return False
    elems = members(H)
    for a in elems:
        if not (H >> G.neg(a)) & 1:
            return False
        for b in elems:
            if not (H >> G.add(a, b)) & 1:
                return False
    return True


def coset_labels(G: GroupSpec, H: int) -> list[int]:
    """Assign each element a coset label in [0, n/|H|); label 0 is H itself.

    Labels are ordered by the least element of each coset.
    """
    if not is_subgroup(G, H):
        raise ValueError("H is not a subgroup")
    labels = [-1] * G.n
    next_label = 0
    for x in G.elements():
        if labels[x] >= 0:
            continue
        for y in iter_bits(G.translate(H, x)):
            labels[y] = next_label
        next_label += 1
    return labels


def cosets(G: GroupSpec, H: int) -> list[int]:
    """The coset partition of G by H, as masks, ordered by least element."""
    labels = coset_labels(G, H)
    out = [0] * (G.n // H.bit_count())
    for x, lab in enumerate(labels):
        out[lab] |= 1 << x
    return out


def automorphisms(G: GroupSpec, max_order: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[tuple[int, ...]]:
    """All automorphisms of G as index permutations, brute-forced from
    generator-image tuples.  Guarded because the search is exponential in rank."""
    if G.n > max_order:
        raise BudgetExceededError(
            f"automorphism enumeration capped at order {max_order}, got {G.n}"
        )
    if G.n == 1:
        return [(0,)]
    gens = []
    for i in range(len(G.orders)):
        coords = [0] * len(G.orders)
        coords[i] = 1
        gens.append(G.encode(coords))
    candidates = [
        [x for x in G.elements() if G.scalar_mul(m, x) == 0] for m in G.orders
    ]
    out = []
    for images in product(*candidates):
        perm = []
        for x in G.elements():
            digits = G.decode(x)
            acc = 0
            for d, img in zip(digits, images):
                acc = G.add(acc, G.scalar_mul(d, img))
            perm.append(acc)
        if len(set(perm)) == G.n:
            out.append(tuple(perm))
    out.sort()
    return out


def abelian_groups_up_to(max_order: int, min_order: int = 2) -> list[GroupSpec]:
    """One GroupSpec per isomorphism class of abelian groups of each order in
    [min_order, max_order], in primary decomposition (prime-power factors)."""

    def partitions(k: int, cap: int | None = None) -> list[list[int]]:
        if k == 0:
            return [[]]
        cap = k if cap is None else min(cap, k)
        out = []
        for first in range(cap, 0, -1):
            for rest in partitions(k - first, first):
                out.append([first] + rest)
        return out

    out = []
    for order in range(min_order, max_order + 1):
        # primary decomposition per prime
        factorizations: list[list[tuple[int, ...]]] = []
        m = order
        p = 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factorizations.append([tuple(p**part for part in ps) for ps in partitions(e)])
            p += 1
        if m > 1:
            factorizations.append([(m,)])
        for combo in product(*factorizations):
            orders = sorted(f for group_part in combo for f in group_part)
            out.append(GroupSpec(orders))
    return out

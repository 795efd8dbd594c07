import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerosum.errors import BudgetExceededError
from zerosum.group import (
    GroupSpec,
    automorphisms,
    coset_labels,
    cosets,
    cyclic_subgroup,
    is_subgroup,
    mask_of,
    members,
    rep_count,
    stabilizer,
    sumset,
)
from conftest import mask

group_strategy = st.lists(st.integers(2, 8), min_size=1, max_size=3).map(GroupSpec)


def test_add_examples(c2x4):
    assert GroupSpec([6]).add(4, 5) == 3
    assert c2x4.add(c2x4.encode((1, 3)), c2x4.encode((1, 2))) == c2x4.encode((0, 1))
    for a in c2x4.elements():
        assert c2x4.add(a, 0) == a


def test_scalar_and_neg(c5, c2x4):
    assert c5.scalar_mul(3, 1) == 3
    assert c5.neg(2) == 3
    assert c2x4.scalar_mul(2, c2x4.encode((1, 1))) == c2x4.encode((0, 2))


def test_invalid_elements_rejected(c5):
    with pytest.raises(ValueError):
        c5.add(5, 0)
    with pytest.raises(ValueError):
        c5.encode((5,))


def test_order_of():
    assert GroupSpec([12]).order_of(8) == 3
    G = GroupSpec([2, 4])
    # derived: iterate multiples until the identity reappears
    e = G.encode((1, 1))
    acc, k = e, 1
    while acc != 0:
        acc = G.add(acc, e)
        k += 1
    assert k == 4
    assert G.order_of(e) == 4
    assert G.order_of(0) == 1


def test_order_divides_n_exhaustive():
    for G in (GroupSpec([12]), GroupSpec([2, 4]), GroupSpec([3, 3]), GroupSpec([60])):
        for a in G.elements():
            assert G.n % G.order_of(a) == 0


def test_cyclic_subgroup(c2x4):
    assert cyclic_subgroup(GroupSpec([8]), 2) == mask(0, 2, 4, 6)
    assert cyclic_subgroup(c2x4, c2x4.encode((0, 1))) == mask(0, 1, 2, 3)
    assert cyclic_subgroup(c2x4, 0) == mask(0)


def test_sumset_examples(c5):
    assert sumset(c5, mask(0, 1), mask(0, 1)) == mask(0, 1, 2)
    assert sumset(GroupSpec([4]), mask(0, 2), mask(0, 2)) == mask(0, 2)
    G3 = GroupSpec([3])
    assert sumset(G3, G3.full_mask, G3.full_mask) == G3.full_mask
    with pytest.raises(ValueError):
        sumset(c5, 0, mask(1))


def test_rep_count(c5):
    G3 = GroupSpec([3])
    for x in G3.elements():
        assert rep_count(G3, G3.full_mask, G3.full_mask, x) == 3
    assert rep_count(c5, mask(0, 1), mask(0, 1), 1) == 2
    assert rep_count(c5, mask(0, 1), mask(0, 1), 2) == 1


def test_stabilizer_examples(c5):
    assert stabilizer(GroupSpec([4]), mask(0, 2)) == mask(0, 2)
    assert stabilizer(c5, mask(0, 3, 4)) == mask(0)
    assert stabilizer(c5, c5.full_mask) == c5.full_mask


def test_stabilizer_is_subgroup_and_partitions_a():
    # exhaustive over all nonempty subsets for small orders
    for G in (GroupSpec([6]), GroupSpec([8]), GroupSpec([2, 4]), GroupSpec([2, 2, 2])):
        for A in range(1, 1 << G.n):
            H = stabilizer(G, A)
            assert is_subgroup(G, H)
            # A is a union of H-cosets
            for a in members(A):
                assert G.translate(H, a) & ~A == 0


@given(group_strategy, st.data())
@settings(max_examples=50, deadline=None)
def test_stabilizer_random_large(G, data):
    A = data.draw(st.integers(1, (1 << G.n) - 1))
    H = stabilizer(G, A)
    assert is_subgroup(G, H)
    for a in members(A):
        assert G.translate(H, a) & ~A == 0


def test_cosets():
    assert cosets(GroupSpec([4]), mask(0, 2)) == [mask(0, 2), mask(1, 3)]
    cs = cosets(GroupSpec([6]), mask(0, 3))
    assert len(cs) == 3 and all(c.bit_count() == 2 for c in cs)
    G = GroupSpec([5])
    assert cosets(G, mask(0)) == [mask(i) for i in range(5)]
    with pytest.raises(ValueError):
        cosets(GroupSpec([4]), mask(0, 1))


def test_coset_labels_cover():
    G = GroupSpec([2, 6])
    H = cyclic_subgroup(G, G.encode((0, 2)))
    labels = coset_labels(G, H)
    assert sorted(set(labels)) == list(range(G.n // H.bit_count()))


def test_group_axioms_exhaustive():
    for G in (GroupSpec([7]), GroupSpec([2, 4]), GroupSpec([2, 2, 3])):
        for a, b, c in product(G.elements(), repeat=3):
            assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
        for a in G.elements():
            assert G.add(a, 0) == a
            assert G.add(a, G.neg(a)) == 0


@given(group_strategy, st.data())
@settings(max_examples=100, deadline=None)
def test_group_axioms_random(G, data):
    elem = st.integers(0, G.n - 1)
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
    assert G.add(a, b) == G.add(b, a)
    assert G.add(a, G.neg(a)) == 0
    assert G.decode(G.encode(G.decode(a))) == G.decode(a)


@given(group_strategy, st.data())
@settings(max_examples=50, deadline=None)
def test_sumset_commutative_associative(G, data):
    sets = st.integers(1, (1 << G.n) - 1)
    A, B, C = data.draw(sets), data.draw(sets), data.draw(sets)
    assert sumset(G, A, B) == sumset(G, B, A)
    assert sumset(G, sumset(G, A, B), C) == sumset(G, A, sumset(G, B, C))


def test_automorphism_counts():
    assert len(automorphisms(GroupSpec([5]))) == 4
    assert len(automorphisms(GroupSpec([2, 2]))) == 6
    assert len(automorphisms(GroupSpec([2]))) == 1


def test_automorphisms_are_closed_additive_bijections():
    for G in (GroupSpec([8]), GroupSpec([2, 4]), GroupSpec([3, 3]), GroupSpec([12])):
        auts = automorphisms(G)
        aut_set = set(auts)
        for p in auts:
            assert p[0] == 0
            assert sorted(p) == list(G.elements())
            for a, b in product(G.elements(), repeat=2):
                assert p[G.add(a, b)] == G.add(p[a], p[b])
            for q in auts:
                assert tuple(p[q[x]] for x in G.elements()) in aut_set


def test_automorphism_budget_guard():
    with pytest.raises(BudgetExceededError):
        automorphisms(GroupSpec([17]))


def test_spec_string_and_format():
    G = GroupSpec([2, 4])
    assert G.spec_string() == "C2xC4"
    assert G.format_element(G.encode((1, 3))) == "(1,3)"
    assert GroupSpec([12]).format_element(7) == "7"
    assert GroupSpec([]).n == 1


def test_mask_helpers():
    assert members(mask_of([3, 1, 4])) == [1, 3, 4]

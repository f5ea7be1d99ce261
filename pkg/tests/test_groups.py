import itertools
import random

import pytest

from sumdiff import (
    CapExceededError,
    EmptySetError,
    GroupSpec,
    GSet,
    InvalidElementError,
    enumerate_subgroups,
    is_coset,
    sigma,
    subsets,
)

from oracles import add_idx, naive_subgroup_masks, neg_idx

SMALL_GROUPS = [
    GroupSpec((1,)),
    GroupSpec((5,)),
    GroupSpec((6,)),
    GroupSpec((8,)),
    GroupSpec((2, 3)),
    GroupSpec((2, 2, 2)),
    GroupSpec((3, 4)),
]


def test_add_examples():
    assert GroupSpec((5,)).add(3, 4) == 2
    g = GroupSpec((2, 3))
    e = g.encode((1, 2))
    assert g.add(e, e) == g.encode((0, 1))
    g6 = GroupSpec((6,))
    for x in g6.elements():
        assert g6.add(0, x) == x


def test_neg_examples():
    assert GroupSpec((5,)).neg(2) == 3
    assert GroupSpec((6,)).neg(0) == 0
    g = GroupSpec((2, 3))
    assert g.neg(g.encode((1, 1))) == g.encode((1, 2))


@pytest.mark.parametrize("g", SMALL_GROUPS, ids=lambda g: g.label())
def test_group_axioms(g):
    for a, b in itertools.product(g.elements(), repeat=2):
        assert g.add(a, b) == g.add(b, a) == add_idx(g.moduli, a, b)
    for a in g.elements():
        assert g.add(a, 0) == a
        assert g.add(a, g.neg(a)) == 0
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (rng.randrange(g.order) for _ in range(3))
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))


@pytest.mark.parametrize("g", SMALL_GROUPS, ids=lambda g: g.label())
def test_encode_decode_bijection(g):
    seen = set()
    for a in g.elements():
        digits = g.decode(a)
        assert g.encode(digits) == a
        seen.add(digits)
    assert len(seen) == g.order


def test_invalid_elements():
    g = GroupSpec((6,))
    with pytest.raises(InvalidElementError):
        g.add(0, 6)
    with pytest.raises(InvalidElementError):
        g.neg(-1)
    with pytest.raises(InvalidElementError):
        GSet(g, [7])


def test_groupspec_equality_is_elementwise():
    assert GroupSpec((2, 3)) != GroupSpec((3, 2))
    assert GroupSpec((2, 3)) != GroupSpec((6,))
    assert GroupSpec((2, 3)) == GroupSpec((2, 3))
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSpec((0, 3))


def test_subgroups_z12():
    subs = enumerate_subgroups(GroupSpec((12,)))
    assert [len(s) for s in subs] == [1, 2, 3, 4, 6, 12]


def test_subgroups_trivial_group():
    subs = enumerate_subgroups(GroupSpec((1,)))
    assert len(subs) == 1 and subs[0].elements() == (0,)


def test_subgroups_klein():
    assert len(enumerate_subgroups(GroupSpec((2, 2)))) == 5


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_subgroup_count_prime(p):
    assert len(enumerate_subgroups(GroupSpec((p,)))) == 2


@pytest.mark.parametrize("moduli", [(12,), (2, 2), (2, 4), (3, 3), (2, 2, 2), (10,)])
def test_subgroups_match_closure_oracle(moduli):
    g = GroupSpec(moduli)
    got = [s.mask for s in enumerate_subgroups(g)]
    assert sorted(got) == naive_subgroup_masks(moduli)
    # deterministic order: by cardinality then bitmask
    assert got == sorted(got, key=lambda m: (m.bit_count(), m))


def test_subgroup_cap():
    with pytest.raises(CapExceededError):
        enumerate_subgroups(GroupSpec((300,)), cap=256)


def test_is_coset_examples():
    g6 = GroupSpec((6,))
    h, rep = is_coset(GSet(g6, [1, 4]))
    assert h.elements() == (0, 3) and rep == 1
    assert is_coset(GSet(GroupSpec((5,)), [0, 1])) is None
    g4 = GroupSpec((4,))
    h, rep = is_coset(GSet(g4, [0, 1, 2, 3]))
    assert h.elements() == (0, 1, 2, 3) and rep == 0


def test_is_coset_rejects_empty():
    with pytest.raises(EmptySetError):
        is_coset(GSet(GroupSpec((4,)), []))


def test_subgroups_pass_is_coset_with_rep_zero():
    for g in SMALL_GROUPS:
        for h in enumerate_subgroups(g):
            sub, rep = is_coset(h)
            assert rep == 0 and sub == h


def test_coset_detection_order_independent():
    # every translate of a subgroup decomposes back to the same subgroup
    g = GroupSpec((2, 3))
    for h in enumerate_subgroups(g):
        for t in g.elements():
            got = is_coset(h.translate(t))
            assert got is not None and got[0] == h


@pytest.mark.parametrize("g", [GroupSpec((8,)), GroupSpec((2, 3))], ids=lambda g: g.label())
def test_coset_iff_sigma_one(g):
    for A in subsets(g):
        assert (is_coset(A) is not None) == (sigma(A) == 1)

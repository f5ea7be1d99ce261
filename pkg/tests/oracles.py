"""Independent brute-force reference implementations for the tests.

Everything here computes from first principles with its own modular
arithmetic over residue tuples (no bitmasks, no kernel code), so the
production paths are checked against a genuinely separate route.
"""

from __future__ import annotations

import itertools


def decode(moduli, idx):
    digits = []
    for n in moduli:
        idx, r = divmod(idx, n)
        digits.append(r)
    return tuple(digits)


def encode(moduli, digits):
    idx = 0
    for n, c in zip(reversed(moduli), reversed(digits)):
        idx = idx * n + (c % n)
    return idx


def add_idx(moduli, a, b):
    da, db = decode(moduli, a), decode(moduli, b)
    return encode(moduli, tuple(x + y for x, y in zip(da, db)))


def neg_idx(moduli, a):
    return encode(moduli, tuple(-x for x in decode(moduli, a)))


def naive_sumset(moduli, A, B):
    return sorted({add_idx(moduli, a, b) for a in A for b in B})


def naive_diffset(moduli, A, B):
    return sorted({add_idx(moduli, a, neg_idx(moduli, b)) for a in A for b in B})


def naive_iterated(moduli, A, n, m):
    """nA - mA by an (n+m)-deep product loop."""
    out = set()
    for plus in itertools.product(A, repeat=n):
        for minus in itertools.product(A, repeat=m):
            v = 0
            for a in plus:
                v = add_idx(moduli, v, a)
            for b in minus:
                v = add_idx(moduli, v, neg_idx(moduli, b))
            out.add(v)
    return sorted(out)


def int_sumset(A, B):
    return {a + b for a in A for b in B}


def int_iterated(pts, n, m):
    """nA - mA over the integers, by set folding (exact in Z)."""
    acc = None
    pts = set(pts)
    for _ in range(n):
        acc = set(pts) if acc is None else int_sumset(acc, pts)
    neg = {-p for p in pts}
    for _ in range(m):
        acc = set(neg) if acc is None else int_sumset(acc, neg)
    return acc


def naive_subgroup_masks(moduli):
    """All subgroups by checking closure of every subset containing zero."""
    order = 1
    for n in moduli:
        order *= n
    out = []
    for mask in range(1, 1 << order):
        if mask & 1 == 0:
            continue
        members = [i for i in range(order) if (mask >> i) & 1]
        if all(
            (mask >> add_idx(moduli, a, b)) & 1 for a in members for b in members
        ) and all((mask >> neg_idx(moduli, a)) & 1 for a in members):
            out.append(mask)
    return sorted(out)


def naive_coset_masks(moduli):
    """Every coset of every subgroup, as a set of masks."""
    order = 1
    for n in moduli:
        order *= n
    cosets = set()
    for h in naive_subgroup_masks(moduli):
        members = [i for i in range(order) if (h >> i) & 1]
        for t in range(order):
            m = 0
            for a in members:
                m |= 1 << add_idx(moduli, a, t)
            cosets.add(m)
    return cosets


def divisor_coset_count(n):
    """Number of cosets in a cyclic group: one subgroup per divisor d, n/d translates."""
    return sum(n // d for d in range(1, n + 1) if n % d == 0)

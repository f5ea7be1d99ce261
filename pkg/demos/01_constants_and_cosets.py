#!/usr/bin/env python3
"""Sumsets, difference sets, and the constants sigma and delta.

A subset of a finite abelian group has a doubling constant sigma = |A+A|/|A|
and a difference constant delta = |A-A|/|A|, both >= 1 and both exactly 1
precisely when the set is a coset of a subgroup. This walk-through computes a
few examples with exact rationals and checks the coset characterization.
"""

from sumdiff import GroupSpec, GSet, delta, diffset, enumerate_subgroups, is_coset, sigma, sumset

g8 = GroupSpec((8,))
A = GSet(g8, [0, 1, 3])
print(f"A = {A}")
print(f"A + A = {sumset(A, A)}   (|A+A| = {len(sumset(A, A))})")
print(f"A - A = {diffset(A, A)}   (|A-A| = {len(diffset(A, A))})")
print(f"sigma(A) = {sigma(A)},  delta(A) = {delta(A)}")
print()

# A coset: {1, 4} in Z6 is 1 + {0, 3}
g6 = GroupSpec((6,))
B = GSet(g6, [1, 4])
print(f"B = {B} has sigma = {sigma(B)} and delta = {delta(B)}")
sub, rep = is_coset(B)
print(f"indeed B = {rep} + {sub}")
print()

# every subgroup of Z12, found by closure search
print("subgroups of Z12:")
for H in enumerate_subgroups(GroupSpec((12,))):
    print(f"  order {len(H):2d}: {H}")
print()

# product groups work the same way
g = GroupSpec((2, 3))
C = GSet(g, [g.encode((0, 0)), g.encode((1, 1))])
print(f"in {g.label()}: C = {C}, sigma = {sigma(C)}, coset: {is_coset(C) is not None}")

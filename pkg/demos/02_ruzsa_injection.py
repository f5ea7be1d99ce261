#!/usr/bin/env python3
"""The injection behind |A| |A-A| <= |A+A|^2, made concrete.

Pick one witness pair (u, v) with u - v = w for every difference w; then
(a, w) -> (a + u, a + v) is injective from A x (A-A) into (A+A) x (A+A).
Counting domain and codomain gives the size bound, and the map is onto the
whole codomain exactly when A is a coset.
"""

from sumdiff import (
    GroupSpec,
    GSet,
    build_injection,
    build_witness_table,
    check_surjective,
    diffset,
    sumset,
    verify_injective,
)

g5 = GroupSpec((5,))
A = GSet(g5, [0, 1])
table = build_witness_table(A)
print(f"A = {A}, A - A = {diffset(A, A)}")
print("witness pairs (u - v = w):")
for w, (u, v) in sorted(table.pairs.items()):
    print(f"  w = {w}:  ({u}, {v})")

inj = build_injection(A, table)
print("\nthe injection on A x (A-A):")
for (a, w), (o1, o2) in sorted(inj.pairs.items()):
    print(f"  ({a}, {w}) -> ({o1}, {o2})")

print(f"\ninjective:  {verify_injective(inj)}")
print(f"surjective: {check_surjective(inj)}   "
      f"({len(inj.pairs)} values vs {sumset(A, A).card}^2 targets)")
print(f"so |A| |A-A| = {A.card * diffset(A, A).card} <= {sumset(A, A).card}^2"
      f" = {sumset(A, A).card ** 2}")

# a coset saturates the codomain
B = GSet(GroupSpec((6,)), [1, 4])
print(f"\nfor the coset B = {B}: surjective = {check_surjective(build_injection(B))}")

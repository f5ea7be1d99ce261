"""Witness tables for the injection A x (A-A) -> (A+A) x (A+A).

Every difference w gets one canonical representation w = u - v with u, v in
A; the injection then sends (a, w) to (a + u', a + v') for that witness pair.
Injectivity of this map is the constructive content of the size bound
|A| |A-A| <= |A+A|^2, and surjectivity characterizes cosets exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySetError
from .sets import GSet, diffset, sumset

__all__ = [
    "WitnessTable",
    "InjectionTable",
    "build_witness_table",
    "build_injection",
    "verify_injective",
    "check_surjective",
]


@dataclass
class WitnessTable:
    """For each difference w, a pair (u, v) of members with u - v = w."""

    base: GSet
    pairs: dict  # w -> (u, v)


@dataclass
class InjectionTable:
    """Total map on A x (A-A); value at (a, w) is (a + u, a + v)."""

    base: GSet
    witness: WitnessTable
    pairs: dict  # (a, w) -> (out1, out2)


def build_witness_table(A: GSet) -> WitnessTable:
    """Canonical witnesses: the lexicographically least (u, v) per difference.

    Since v = u - w is forced once u is chosen, scanning members in ascending
    index order gives the lexicographic minimum; in particular the difference
    0 is always witnessed by (a0, a0) with a0 the least member.
    """
    if not A.card:
        raise EmptySetError("witness table needs a non-empty set")
    g = A.group
    pairs = {}
    for w in diffset(A, A):
        neg_w = g.neg(w)
        for u in A:
            v = g.add(u, neg_w)
            if v in A:
                pairs[w] = (u, v)
                break
    return WitnessTable(A, pairs)


def build_injection(A: GSet, witness: WitnessTable | None = None) -> InjectionTable:
    """Materialize the map on all of A x (A-A)."""
    if witness is None:
        witness = build_witness_table(A)
    elif witness.base != A:
        raise ValueError("witness table was built from a different set")
    g = A.group
    out = {}
    for a in A:
        for w, (u, v) in witness.pairs.items():
            out[(a, w)] = (g.add(a, u), g.add(a, v))
    return InjectionTable(A, witness, out)


def verify_injective(inj: InjectionTable) -> bool:
    """True iff no two domain points share a value.

    Expected to hold for every non-empty set; a False return means the
    construction itself is broken.
    """
    return len(set(inj.pairs.values())) == len(inj.pairs)


def check_surjective(inj: InjectionTable) -> bool:
    """True iff every pair in (A+A) x (A+A) is attained."""
    s = sumset(inj.base, inj.base)
    return len(set(inj.pairs.values())) == s.card ** 2

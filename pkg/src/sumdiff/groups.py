"""Exact arithmetic and subgroup structure for finite abelian groups.

A group is a product of cyclic factors Z_{n_1} x ... x Z_{n_k}. Elements are
canonical integer indices in [0, N), N = n_1 * ... * n_k, encoding the residue
tuple in mixed radix with the first modulus least significant. Subsets are
dense bitmasks (plain Python ints) indexed by element; every helper iterates
bits in ascending order, which keeps all downstream constructions
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Iterator

from .errors import CapExceededError, EmptySetError, InvalidElementError

__all__ = ["GroupSpec", "iter_bits", "enumerate_subgroups", "is_coset"]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by its cyclic factor sizes."""

    moduli: tuple[int, ...]
    order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        mods = tuple(int(n) for n in self.moduli)
        if not mods:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in mods):
            raise ValueError(f"moduli must all be >= 1, got {mods}")
        object.__setattr__(self, "moduli", mods)
        object.__setattr__(self, "order", prod(mods))

    def label(self) -> str:
        return "x".join(f"Z{n}" for n in self.moduli)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def exponent(self) -> int:
        return lcm(*self.moduli)

    def elements(self) -> range:
        return range(self.order)

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise InvalidElementError(f"element {a!r} out of range for {self.label()}")
        return a

    def decode(self, a: int) -> tuple[int, ...]:
        """Residue tuple of an element index, first modulus least significant."""
        self.check_element(a)
        digits = []
        for n in self.moduli:
            a, r = divmod(a, n)
            digits.append(r)
        return tuple(digits)

    def encode(self, digits) -> int:
        digits = tuple(digits)
        if len(digits) != len(self.moduli):
            raise InvalidElementError(
                f"expected {len(self.moduli)} residues for {self.label()}, got {len(digits)}"
            )
        idx = 0
        for n, c in zip(reversed(self.moduli), reversed(digits)):
            if not 0 <= c < n:
                raise InvalidElementError(f"residue {c} out of range for modulus {n}")
            idx = idx * n + c
        return idx

    def add(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        if len(self.moduli) == 1:
            return (a + b) % self.moduli[0]
        idx, stride = 0, 1
        for n in self.moduli:
            a, ra = divmod(a, n)
            b, rb = divmod(b, n)
            idx += ((ra + rb) % n) * stride
            stride *= n
        return idx

    def neg(self, a: int) -> int:
        self.check_element(a)
        if len(self.moduli) == 1:
            return -a % self.moduli[0]
        idx, stride = 0, 1
        for n in self.moduli:
            a, ra = divmod(a, n)
            idx += (-ra % n) * stride
            stride *= n
        return idx

    def scale(self, a: int, u: int) -> int:
        """Scalar multiple u*a, computed residue-wise."""
        self.check_element(a)
        idx, stride = 0, 1
        for n in self.moduli:
            a, ra = divmod(a, n)
            idx += (ra * u % n) * stride
            stride *= n
        return idx

    def units(self) -> tuple[int, ...]:
        """Scalars acting bijectively on the group (coprime to the exponent)."""
        e = self.exponent
        if e == 1:
            return (1,)
        return tuple(u for u in range(1, e) if gcd(u, e) == 1)

    # -- mask-level operations ------------------------------------------------

    def shift_mask(self, mask: int, a: int) -> int:
        """Image of a dense subset mask under translation by element ``a``."""
        self.check_element(a)
        if a == 0 or mask == 0:
            return mask
        n = self.order
        if len(self.moduli) == 1:
            return ((mask << a) | (mask >> (n - a))) & ((1 << n) - 1)
        out = mask
        rem = a
        for (stride, sel), nj in zip(_digit_layout(self), self.moduli):
            rem, aj = divmod(rem, nj)
            if aj == 0 or nj == 1:
                continue
            acc = 0
            for r in range(nj):
                part = out & sel[r]
                if not part:
                    continue
                d = ((r + aj) % nj - r) * stride
                acc |= part << d if d >= 0 else part >> -d
            out = acc
        return out

    def neg_mask(self, mask: int) -> int:
        if mask == 0:
            return 0
        table = _neg_bit(self)
        acc = 0
        for i in iter_bits(mask):
            acc |= table[i]
        return acc

    def scale_mask(self, mask: int, u: int) -> int:
        if mask == 0:
            return 0
        table = _scale_bit(self, u)
        acc = 0
        for i in iter_bits(mask):
            acc |= table[i]
        return acc


@lru_cache(maxsize=None)
def _digit_layout(g: GroupSpec) -> tuple:
    """Per-factor (stride, residue-selection masks) over the index range."""
    layout = []
    stride = 1
    for n in g.moduli:
        sel = [0] * n
        for i in range(g.order):
            sel[(i // stride) % n] |= 1 << i
        layout.append((stride, tuple(sel)))
        stride *= n
    return tuple(layout)


@lru_cache(maxsize=None)
def _neg_bit(g: GroupSpec) -> tuple[int, ...]:
    return tuple(1 << g.neg(i) for i in range(g.order))


@lru_cache(maxsize=None)
def _scale_bit(g: GroupSpec, u: int) -> tuple[int, ...]:
    return tuple(1 << g.scale(i, u) for i in range(g.order))


def _close_under_addition(g: GroupSpec, mask: int) -> int:
    """Smallest addition-closed superset containing zero.

    In a finite group closure under addition suffices: each element's
    additive order supplies its inverse.
    """
    cur = mask | 1
    while True:
        nxt = cur
        for a in iter_bits(cur):
            nxt |= g.shift_mask(cur, a)
        if nxt == cur:
            return cur
        cur = nxt


def enumerate_subgroups(g: GroupSpec, cap: int = 256) -> list:
    """All subgroups of ``g`` as GSets, ordered by (cardinality, bitmask).

    Closure-lattice search: start at {0}, adjoin one outside element at a
    time and close under addition, which reaches every subgroup exactly once
    after dedup. Uniform over products of cyclic factors.
    """
    if g.order > cap:
        raise CapExceededError(
            f"subgroup enumeration needs group order <= {cap}, got {g.order}"
        )
    from .sets import GSet

    found = {1}
    frontier = [1]
    while frontier:
        h = frontier.pop()
        for x in iter_bits(g.full_mask & ~h):
            s = _close_under_addition(g, h | (1 << x))
            if s not in found:
                found.add(s)
                frontier.append(s)
    return [GSet.from_mask(g, m) for m in sorted(found, key=lambda m: (m.bit_count(), m))]


def is_coset(A) -> tuple | None:
    """Decompose A as (subgroup H, representative a0), or None.

    Uses a0 = least element of A; A is a coset exactly when H = A - a0 is
    closed under subtraction. The answer does not depend on which member is
    used as the representative.
    """
    if A.card == 0:
        raise EmptySetError("the empty set is not a coset of anything")
    from .sets import GSet

    g = A.group
    a0 = (A.mask & -A.mask).bit_length() - 1
    h = g.shift_mask(A.mask, g.neg(a0))
    for b in iter_bits(h):
        if g.shift_mask(h, g.neg(b)) & ~h:
            return None
    return GSet.from_mask(g, h), a0

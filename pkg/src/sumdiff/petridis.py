"""Minimizing subsets, the element-by-element induction replay, and equality
certificates.

For a fixed A, the key quantity is the ratio K = |A+X| / |X| minimized over
non-empty X inside a chosen base set. A minimizer of least cardinality makes
|A+X'| > K |X'| strict on every proper non-empty X' (a tight proper subset
would itself be a smaller minimizer), and then |A+X+C| <= K |X+C| holds for
every C. The replay walks C one element at a time and logs which of the three
equality conditions hold at each step; the equality case is certified by the
subset Q of C whose translates contribute disjoint fresh blocks.

Subset searches are exhaustive by design and use incremental prefix unions:
the union for a subset mask is derived from the mask with its lowest bit
cleared, so each candidate costs one word-OR of bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    CapExceededError,
    CertificateError,
    EmptySetError,
    HypothesisViolationError,
)
from .groups import iter_bits
from .sets import GSet, _require_same_group, independent, sumset

__all__ = [
    "MinimizerResult",
    "ComparisonRecord",
    "TraceStep",
    "InductionTrace",
    "EqualityCertificate",
    "find_minimizer",
    "verify_hypothesis",
    "petridis_inequality",
    "replay_trace",
    "extract_certificate",
    "brute_force_certificate",
]


@dataclass(frozen=True)
class MinimizerResult:
    x: GSet
    k: Fraction
    strict_on_proper_subsets: bool


@dataclass(frozen=True)
class ComparisonRecord:
    """One exact comparison |A+X+C| vs K |X+C|."""

    lhs: int
    rhs: Fraction
    equality: bool
    holds: bool


@dataclass(frozen=True)
class TraceStep:
    index: int  # k, 1-based
    element: int  # c_k
    x_k: GSet  # members x with x + A + c_k already covered
    y_k: GSet  # members x with x + c_k already covered
    lhs_size: int  # |X + A + C_k|
    xc_size: int  # |X + C_k|
    slack: Fraction  # K |X + C_k| - |X + A + C_k|
    conditions: tuple[bool, bool, bool]  # disjoint union; x_k in {empty, X}; y_k == x_k


@dataclass(frozen=True)
class InductionTrace:
    a: GSet
    x: GSet
    c: GSet
    order: tuple[int, ...]
    k: Fraction
    steps: tuple[TraceStep, ...]
    equality: bool


@dataclass(frozen=True)
class EqualityCertificate:
    """A subset Q of C with X+C = X+Q and A+X independent of Q."""

    q: GSet


def find_minimizer(A: GSet, base: GSet, cap: int = 20) -> MinimizerResult:
    """Global minimum of |A+X| / |X| over non-empty X inside ``base``.

    Exhaustive over all 2^|base| - 1 candidates with incremental unions.
    Ties go to the smaller cardinality, then the smaller bitmask, so the
    result is reproducible.
    """
    _require_same_group(A, base, "find_minimizer")
    if not A.card:
        raise EmptySetError("find_minimizer needs a non-empty A")
    if not base.card:
        raise EmptySetError("find_minimizer needs a non-empty base")
    if base.card > cap:
        raise CapExceededError(f"minimizer base size {base.card} exceeds cap {cap}")
    g = A.group
    elems = base.elements()
    shifts = [g.shift_mask(A.mask, x) for x in elems]
    nb = len(elems)
    unions = [0] * (1 << nb)
    best_num = best_card = best_pos = 0
    for cmask in range(1, 1 << nb):
        low = cmask & -cmask
        u = unions[cmask ^ low] | shifts[low.bit_length() - 1]
        unions[cmask] = u
        num = u.bit_count()
        card = cmask.bit_count()
        if best_card == 0:
            better = True
        else:
            d = num * best_card - best_num * card
            better = d < 0 or (d == 0 and card < best_card)
        if better:
            best_num, best_card, best_pos = num, card, cmask
    xmask = 0
    for i in iter_bits(best_pos):
        xmask |= 1 << elems[i]
    x = GSet.from_mask(g, xmask)
    k = Fraction(best_num, best_card)
    return MinimizerResult(x, k, _violating_subset(A, x, k) is None)


@lru_cache(maxsize=65536)
def _violating_subset(A: GSet, X: GSet, K: Fraction) -> GSet | None:
    """First witness against the equality hypothesis, or None.

    The hypothesis: |A+X| = K |X| exactly, and |A+X'| > K |X'| for every
    proper non-empty X' of X. Proper subsets are scanned in ascending-mask
    order over X's elements; the full set is reported last if its equality
    fails. All comparisons cross-multiply integers.
    """
    g = A.group
    elems = X.elements()
    shifts = [g.shift_mask(A.mask, x) for x in elems]
    nb = len(elems)
    kn, kd = K.numerator, K.denominator
    full = (1 << nb) - 1
    unions = [0] * (1 << nb)
    for cmask in range(1, full + 1):
        low = cmask & -cmask
        u = unions[cmask ^ low] | shifts[low.bit_length() - 1]
        unions[cmask] = u
        num = u.bit_count()
        card = cmask.bit_count()
        if cmask == full:
            if num * kd != kn * card:
                return X
        elif num * kd <= kn * card:
            bad = 0
            for i in iter_bits(cmask):
                bad |= 1 << elems[i]
            return GSet.from_mask(g, bad)
    return None


def verify_hypothesis(A: GSet, X: GSet, K, cap: int = 20) -> bool:
    """Exhaustive exact check of |A+X| = K|X| plus strictness on proper subsets."""
    if not X.card:
        raise EmptySetError("hypothesis check needs a non-empty X")
    if X.card > cap:
        raise CapExceededError(f"hypothesis check over {X.card} elements exceeds cap {cap}")
    return _violating_subset(A, X, Fraction(K)) is None


def petridis_inequality(
    A: GSet, X: GSet, K, C: GSet, *, check_hypothesis: bool = True, cap: int = 20
) -> ComparisonRecord:
    """Exact comparison of |A+X+C| against K |X+C|.

    Under the verified hypothesis the verdict is always <=; the record says
    whether it is an equality.
    """
    K = Fraction(K)
    if check_hypothesis:
        if X.card > cap:
            raise CapExceededError(f"hypothesis check over {X.card} elements exceeds cap {cap}")
        bad = _violating_subset(A, X, K)
        if bad is not None:
            raise HypothesisViolationError(
                f"hypothesis fails for X' = {bad}: |A+X'| <= K|X'|"
                if bad != X
                else f"|A+X| != K|X| for X = {bad}",
                violating=bad,
            )
    if not C.card:
        raise EmptySetError("petridis_inequality needs a non-empty C")
    lhs = sumset(sumset(A, X), C).card
    rhs = K * sumset(X, C).card
    return ComparisonRecord(lhs, rhs, lhs == rhs, lhs <= rhs)


def replay_trace(A: GSet, X: GSet, C: GSet, order=None) -> InductionTrace:
    """Replay the induction over C's elements, logging equality conditions.

    Step k adjoins c_k to the growing prefix C_k. x_k collects the members x
    whose translate x+A+c_k is already covered by X+A+C_{k-1} (empty at k=1,
    where the previous prefix is empty); y_k the x with x+c_k already in
    X+C_{k-1}. The three recorded conditions are: the fresh part of X+A+c_k
    is disjoint from the previous union; x_k is empty or all of X; y_k equals
    x_k. They hold at every step exactly when the final comparison is an
    equality.

    The extracted certificate depends on the processing order, which is an
    explicit parameter (default: ascending element index) and is recorded.
    """
    _require_same_group(A, X, "replay_trace")
    _require_same_group(A, C, "replay_trace")
    if not A.card or not X.card:
        raise EmptySetError("replay_trace needs non-empty A and X")
    if not C.card:
        raise EmptySetError("replay_trace needs a non-empty C")
    order = tuple(order) if order is not None else C.elements()
    if sorted(order) != list(C.elements()):
        raise ValueError("order must be a permutation of C's elements")
    g = A.group
    k_ratio = Fraction(sumset(A, X).card, X.card)
    ax_mask = sumset(A, X).mask
    a_mask = A.mask
    x_elems = X.elements()
    axc_prev = 0
    xc_prev = 0
    steps = []
    for k, ck in enumerate(order, 1):
        xk = 0
        yk = 0
        covered = 0  # union of x + A + c_k over x in x_k
        for x in x_elems:
            t = g.add(x, ck)
            xa_t = g.shift_mask(a_mask, t)
            if xa_t & ~axc_prev == 0:
                xk |= 1 << x
                covered |= xa_t
            if (xc_prev >> t) & 1:
                yk |= 1 << x
        ax_ck = g.shift_mask(ax_mask, ck)
        x_ck = g.shift_mask(X.mask, ck)
        cond_disjoint = axc_prev & (ax_ck & ~covered) == 0
        cond_all_or_none = xk == 0 or xk == X.mask
        cond_y_eq_x = yk == xk
        axc = axc_prev | ax_ck
        xc = xc_prev | x_ck
        lhs = axc.bit_count()
        xcs = xc.bit_count()
        steps.append(
            TraceStep(
                k,
                ck,
                GSet.from_mask(g, xk),
                GSet.from_mask(g, yk),
                lhs,
                xcs,
                k_ratio * xcs - lhs,
                (cond_disjoint, cond_all_or_none, cond_y_eq_x),
            )
        )
        axc_prev, xc_prev = axc, xc
    return InductionTrace(A, X, C, order, k_ratio, tuple(steps), steps[-1].slack == 0)


def extract_certificate(trace: InductionTrace) -> EqualityCertificate | None:
    """Q = the c_k whose translate contributed a fresh disjoint block (x_k empty).

    Returns None on a strict trace. On an equality trace the certificate is
    validated against both defining conditions; a validation failure raises,
    since it can only come from an implementation bug.
    """
    if not trace.equality:
        return None
    g = trace.a.group
    qmask = 0
    for st in trace.steps:
        if st.x_k.card == 0:
            qmask |= 1 << st.element
    q = GSet.from_mask(g, qmask)
    if sumset(trace.x, q) != sumset(trace.x, trace.c) or not independent(
        sumset(trace.a, trace.x), q
    ):
        raise CertificateError(
            f"equality trace produced an invalid certificate Q = {q}"
        )
    return EqualityCertificate(q)


def brute_force_certificate(A: GSet, X: GSet, C: GSet, cap: int = 16) -> EqualityCertificate | None:
    """Independent oracle: search every non-empty Q inside C for the certificate.

    Candidates are tried in (cardinality, bitmask) order and the first one
    satisfying both conditions wins, so the chosen Q is reproducible.
    """
    _require_same_group(A, X, "brute_force_certificate")
    _require_same_group(A, C, "brute_force_certificate")
    if not A.card or not X.card or not C.card:
        raise EmptySetError("brute_force_certificate needs non-empty A, X, C")
    if C.card > cap:
        raise CapExceededError(f"certificate search over {C.card} elements exceeds cap {cap}")
    g = A.group
    xc = sumset(X, C)
    ax = sumset(A, X)
    cands = []
    sub = C.mask
    while sub:
        cands.append(sub)
        sub = (sub - 1) & C.mask
    cands.sort(key=lambda m: (m.bit_count(), m))
    for qmask in cands:
        q = GSet.from_mask(g, qmask)
        if sumset(X, q) == xc and independent(ax, q):
            return EqualityCertificate(q)
    return None

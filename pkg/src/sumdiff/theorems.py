"""Structured verdicts for the workbench's headline claims.

Each verifier returns a Verdict instead of raising on failure, so exhaustive
sweeps record anomalies rather than abort; "violated" is a first-class outcome
that a correct build never produces, which makes sweeps double as a regression
oracle. All comparisons between rational powers clear denominators first and
compare integers, e.g. delta <= sigma^2 is checked as |A-A| |A| <= |A+A|^2; no
roots, no floats.

Claim identifiers accepted throughout (also by the CLI):

* ``fact1`` -- sigma = 1, delta = 1, and "A is a coset" are all equivalent;
* ``ineq1`` -- delta <= sigma^2 and sigma <= delta^2;
* ``thm1``  -- equality in either bound of ineq1 happens exactly for cosets;
* ``thm2``  -- delta = sigma^2 only for cosets (injection surjectivity);
* ``thm3``  -- the five-link minimizer chain bounding |A+A| by delta^2 |A|;
* ``thm5``  -- |nA| < sigma^n |A| strictly whenever sigma > 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .errors import CapExceededError, EmptySetError
from .groups import GroupSpec, is_coset
from .petridis import find_minimizer
from .ruzsa import build_injection, check_surjective, verify_injective
from .sets import GSet, diffset, iterated, subsets, sumset

__all__ = [
    "Verdict",
    "SweepSummary",
    "CLAIM_IDS",
    "HOLDS",
    "EQUALITY",
    "VIOLATED",
    "check_fact1",
    "check_inequality",
    "check_upper",
    "check_main_theorem",
    "check_lower_chain",
    "check_plunnecke",
    "run_claim",
    "sweep_claim",
]

HOLDS = "holds"
EQUALITY = "equality-case"
VIOLATED = "violated"

CLAIM_IDS = ("fact1", "ineq1", "thm1", "thm2", "thm3", "thm5")


@dataclass(frozen=True)
class Verdict:
    claim: str
    group: GroupSpec
    elements: tuple[int, ...]
    sizes: dict
    ratios: dict
    outcome: str
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "group": self.group.label(),
            "set": ",".join(map(str, self.elements)),
            "sizes": dict(self.sizes),
            "ratios": {k: [v.numerator, v.denominator] for k, v in self.ratios.items()},
            "outcome": self.outcome,
            "details": _jsonify(self.details),
        }


def _jsonify(value):
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, GSet):
        return list(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def _base_sizes(A: GSet) -> tuple[int, int, int]:
    if not A.card:
        raise EmptySetError("verdicts need a non-empty set")
    return A.card, sumset(A, A).card, diffset(A, A).card


def check_fact1(A: GSet) -> Verdict:
    """sigma = 1, delta = 1 and cosetness must agree; record the shared value."""
    a, s, d = _base_sizes(A)
    coset = is_coset(A)
    preds = (s == a, d == a, coset is not None)
    if len(set(preds)) == 1:
        outcome = EQUALITY if preds[0] else HOLDS
    else:
        outcome = VIOLATED
    details = {"sigma_is_one": preds[0], "delta_is_one": preds[1], "coset": preds[2]}
    if coset is not None:
        details["subgroup"] = coset[0]
        details["representative"] = coset[1]
    return Verdict(
        "fact1",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "AmA": d},
        {"sigma": Fraction(s, a), "delta": Fraction(d, a)},
        outcome,
        details,
    )


def check_inequality(A: GSet) -> Verdict:
    """Both bounds relating sigma and delta, with equality flags."""
    a, s, d = _base_sizes(A)
    upper_ok = d * a <= s * s  # delta <= sigma^2
    lower_ok = s * a <= d * d  # sigma <= delta^2
    upper_tight = d * a == s * s
    lower_tight = s * a == d * d
    if not (upper_ok and lower_ok):
        outcome = VIOLATED
    elif upper_tight or lower_tight:
        outcome = EQUALITY
    else:
        outcome = HOLDS
    return Verdict(
        "ineq1",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "AmA": d},
        {"sigma": Fraction(s, a), "delta": Fraction(d, a)},
        outcome,
        {"upper_tight": upper_tight, "lower_tight": lower_tight},
    )


def check_upper(A: GSet) -> Verdict:
    """delta <= sigma^2 with equality exactly on cosets.

    Cross-checked constructively: the witness injection must be injective
    always and surjective exactly when A is a coset.
    """
    a, s, d = _base_sizes(A)
    inj = build_injection(A)
    injective = verify_injective(inj)
    surjective = check_surjective(inj)
    coset = is_coset(A) is not None
    upper_ok = d * a <= s * s
    upper_tight = d * a == s * s
    consistent = injective and upper_ok and upper_tight == coset == surjective
    if not consistent:
        outcome = VIOLATED
    else:
        outcome = EQUALITY if coset else HOLDS
    return Verdict(
        "thm2",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "AmA": d},
        {"sigma": Fraction(s, a), "delta": Fraction(d, a)},
        outcome,
        {
            "injective": injective,
            "surjective": surjective,
            "upper_tight": upper_tight,
            "coset": coset,
        },
    )


def check_main_theorem(A: GSet) -> Verdict:
    """Equality in either bound if and only if A is a coset."""
    a, s, d = _base_sizes(A)
    upper_tight = d * a == s * s  # delta = sigma^2
    lower_tight = s * a == d * d  # sigma = delta^2
    eq_any = upper_tight or lower_tight
    coset = is_coset(A) is not None
    if eq_any != coset:
        outcome = VIOLATED
    else:
        outcome = EQUALITY if eq_any else HOLDS
    return Verdict(
        "thm1",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "AmA": d},
        {"sigma": Fraction(s, a), "delta": Fraction(d, a)},
        outcome,
        {"upper_tight": upper_tight, "lower_tight": lower_tight, "coset": coset},
    )


def check_lower_chain(A: GSet, cap: int = 20) -> Verdict:
    """The five-link chain from |A+A| up to delta^2 |A| via the minimizer.

    Links: |2A| <= |2A+X| <= K|X+A| = K^2|X| <= K^2|A| <= delta^2|A|, where X
    minimizes |A+X|/|X| over non-empty subsets of -A. Every link is evaluated
    exactly and its slack recorded; all links are tight exactly on cosets.
    """
    a, s, d = _base_sizes(A)
    mn = find_minimizer(A, A.negate(), cap=cap)
    x, k = mn.x, mn.k
    two_a = sumset(A, A)
    two_a_x = sumset(two_a, x).card
    xa = sumset(x, A).card
    dd = Fraction(d, a)
    values = [
        Fraction(s),
        Fraction(two_a_x),
        k * xa,
        k * k * x.card,
        k * k * a,
        dd * dd * a,
    ]
    relations = ("<=", "<=", "==", "<=", "<=")
    links = []
    all_hold = True
    all_tight = True
    for (lhs, rhs), rel in zip(zip(values, values[1:]), relations):
        tight = lhs == rhs
        ok = tight if rel == "==" else lhs <= rhs
        links.append({"lhs": lhs, "rel": rel, "rhs": rhs, "holds": ok, "slack": rhs - lhs})
        all_hold = all_hold and ok
        all_tight = all_tight and tight
    if not all_hold:
        outcome = VIOLATED
    else:
        outcome = EQUALITY if all_tight else HOLDS
    return Verdict(
        "thm3",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "AmA": d, "AAX": two_a_x, "XA": xa, "X": x.card},
        {"sigma": Fraction(s, a), "delta": dd, "K": k},
        outcome,
        {"links": links, "X": x, "strict_minimizer": mn.strict_on_proper_subsets},
    )


def check_plunnecke(A: GSet, n: int, cap: int = 20) -> Verdict:
    """|nA| < sigma^n |A| strictly when sigma > 1; equality when sigma = 1.

    The headline comparison clears denominators: |nA| |A|^(n-1) vs |A+A|^n.
    The auxiliary chain |jA+X| <= K^j |X| for j = 1..n is verified as well,
    with X the minimizer over non-empty subsets of A itself.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a, s, d = _base_sizes(A)
    mn = find_minimizer(A, A, cap=cap)
    x, k = mn.x, mn.k
    na = iterated(A, n, 0).card
    main_lhs = na * a ** (n - 1)
    main_rhs = s ** n
    strict_required = s > a
    main_ok = main_lhs < main_rhs if strict_required else main_lhs == main_rhs
    aux = []
    aux_ok = True
    cur = A
    bound = Fraction(1)
    for j in range(1, n + 1):
        bound = bound * k
        jax = sumset(cur, x).card
        ok = jax <= bound * x.card
        aux.append({"j": j, "jA+X": jax, "bound": bound * x.card, "holds": ok})
        aux_ok = aux_ok and ok
        if j < n:
            cur = sumset(cur, A)
    if not (main_ok and aux_ok):
        outcome = VIOLATED
    else:
        outcome = HOLDS if strict_required else EQUALITY
    return Verdict(
        "thm5",
        A.group,
        A.elements(),
        {"A": a, "AA": s, "nA": na},
        {"sigma": Fraction(s, a), "K": k},
        outcome,
        {"n": n, "main": {"lhs": main_lhs, "rhs": main_rhs}, "aux": aux, "X": x},
    )


def run_claim(claim: str, A: GSet, *, n: int = 2, cap: int = 20) -> Verdict:
    if claim == "fact1":
        return check_fact1(A)
    if claim == "ineq1":
        return check_inequality(A)
    if claim == "thm1":
        return check_main_theorem(A)
    if claim == "thm2":
        return check_upper(A)
    if claim == "thm3":
        return check_lower_chain(A, cap=cap)
    if claim == "thm5":
        return check_plunnecke(A, n, cap=cap)
    raise ValueError(f"unknown claim {claim!r}; expected one of {CLAIM_IDS}")


@dataclass(frozen=True)
class SweepSummary:
    claim: str
    group: GroupSpec
    total: int
    counts: dict  # outcome -> count
    violations: tuple[str, ...]  # set literals, capped at 32

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "group": self.group.label(),
            "total": self.total,
            "counts": dict(self.counts),
            "violations": list(self.violations),
        }


def sweep_claim(
    claim: str,
    g: GroupSpec,
    *,
    n: int = 2,
    cap: int = 20,
    group_cap: int = 24,
    sample: int | None = None,
    seed: int = 0,
) -> SweepSummary:
    """Run one claim over every non-empty subset of ``g`` (or a uniform sample).

    Exhaustive sweeps are capped by group order; sampling lifts that cap. A
    sample draws masks uniformly with replacement from a seeded generator, so
    identical invocations see identical sets.
    """
    if sample is None and g.order > group_cap:
        raise CapExceededError(
            f"exhaustive sweep needs group order <= {group_cap}, got {g.order}"
            " (use sampling for larger groups)"
        )
    total_universe = (1 << g.order) - 1
    if sample is not None and total_universe > sample:
        rng = Random(seed)
        universe = (
            GSet.from_mask(g, rng.randrange(1, total_universe + 1)) for _ in range(sample)
        )
    else:
        universe = subsets(g)
    counts = {HOLDS: 0, EQUALITY: 0, VIOLATED: 0}
    violations = []
    total = 0
    for A in universe:
        v = run_claim(claim, A, n=n, cap=cap)
        counts[v.outcome] += 1
        total += 1
        if v.outcome == VIOLATED and len(violations) < 32:
            violations.append(str(A))
    return SweepSummary(claim, g, total, counts, tuple(violations))

"""Exhaustive enumeration of subsets of small groups and bounded integer sets.

Campaigns walk a universe (one group, or integer sets drawn from a window),
deduplicate by symmetry orbits, and emit one SearchRecord per canonical
representative: exact sizes of A, A+A, A-A, the constants sigma and delta,
structural flags, and float exponents for reporting only. Aggregate counts
are orbit-weighted, i.e. they describe the raw universe before dedup.

Canonical representative = the lexicographically least bitmask in the orbit.
Enumeration is in ascending representative order and can be partitioned into
disjoint mask ranges whose results concatenate deterministically, which is
what both the resumable CSV output and the process-parallel path rely on.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ._version import VERSION
from .errors import CapExceededError
from .groups import GroupSpec, iter_bits, is_coset
from .sets import GSet, diffset, embed_integer_set, sumset

__all__ = [
    "MODE_NONE",
    "MODE_TRANSLATION",
    "MODE_TRANSLATION_NEGATION",
    "MODE_FULL_AFFINE",
    "MODES",
    "PENMAN_WELLS_EXPONENT",
    "SearchRecord",
    "Campaign",
    "ScanSummary",
    "ExponentReport",
    "enumerate_canonical",
    "scan",
    "find_mstd",
    "exponent_report",
    "write_csv",
    "CSV_COLUMNS",
]

MODE_NONE = "none"
MODE_TRANSLATION = "translation"
MODE_TRANSLATION_NEGATION = "translation+negation"
MODE_FULL_AFFINE = "full-affine"
MODES = (MODE_NONE, MODE_TRANSLATION, MODE_TRANSLATION_NEGATION, MODE_FULL_AFFINE)

# Best known lower bound for the exponent C in sigma <= delta^C.
PENMAN_WELLS_EXPONENT = math.log(32 / 5) / math.log(26 / 5)  # = 1.12594...

CSV_COLUMNS = (
    "group",
    "set",
    "card",
    "sum_card",
    "diff_card",
    "sigma_num",
    "sigma_den",
    "delta_num",
    "delta_den",
    "coset",
    "mstd",
    "eq_upper",
    "eq_lower",
)


@dataclass(frozen=True)
class SearchRecord:
    group: str  # group label, or "Z" for integer mode
    elements: tuple[int, ...]
    card: int
    sum_card: int
    diff_card: int
    sigma: Fraction
    delta: Fraction
    coset: bool
    mstd: bool  # more sums than differences
    balanced: bool
    eq_upper: bool  # delta = sigma^2
    eq_lower: bool  # sigma = delta^2
    exponent_up: float | None  # log sigma / log delta, report-only
    exponent_down: float | None  # log delta / log sigma, report-only
    orbit_size: int

    def set_literal(self) -> str:
        return ",".join(map(str, self.elements)) + "@" + self.group

    def csv_row(self) -> tuple:
        return (
            self.group,
            ",".join(map(str, self.elements)),
            self.card,
            self.sum_card,
            self.diff_card,
            self.sigma.numerator,
            self.sigma.denominator,
            self.delta.numerator,
            self.delta.denominator,
            _csv_bool(self.coset),
            _csv_bool(self.mstd),
            _csv_bool(self.eq_upper),
            _csv_bool(self.eq_lower),
        )

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "set": ",".join(map(str, self.elements)),
            "card": self.card,
            "sum_card": self.sum_card,
            "diff_card": self.diff_card,
            "sigma": [self.sigma.numerator, self.sigma.denominator],
            "delta": [self.delta.numerator, self.delta.denominator],
            "coset": self.coset,
            "mstd": self.mstd,
            "balanced": self.balanced,
            "eq_upper": self.eq_upper,
            "eq_lower": self.eq_lower,
            "exponent_up": self.exponent_up,
            "exponent_down": self.exponent_down,
            "orbit_size": self.orbit_size,
        }


def _csv_bool(b: bool) -> str:
    return "true" if b else "false"


@dataclass(frozen=True)
class Campaign:
    """One enumeration: universe, symmetry mode, size bounds, filters."""

    group: GroupSpec | None = None
    ints: tuple[int, int] | None = None  # inclusive integer window
    min_size: int = 1
    max_size: int | None = None
    mode: str = MODE_TRANSLATION_NEGATION
    mstd_only: bool = False
    group_cap: int = 24
    width_cap: int = 16

    def validate(self) -> None:
        if (self.group is None) == (self.ints is None):
            raise ValueError("campaign needs exactly one of group= or ints=")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.min_size < 1:
            raise ValueError("min_size must be >= 1")
        if self.group is not None and self.group.order > self.group_cap:
            raise CapExceededError(
                f"group order {self.group.order} exceeds scan cap {self.group_cap}"
            )
        if self.ints is not None:
            lo, hi = self.ints
            if hi < lo:
                raise ValueError(f"empty integer window {lo}..{hi}")
            if hi - lo + 1 > self.width_cap:
                raise CapExceededError(
                    f"integer window width {hi - lo + 1} exceeds cap {self.width_cap}"
                )

    def width(self) -> int:
        if self.group is not None:
            return self.group.order
        lo, hi = self.ints
        return hi - lo + 1

    def describe(self) -> str:
        universe = self.group.label() if self.group else f"ints {self.ints[0]}..{self.ints[1]}"
        hi = self.max_size if self.max_size is not None else self.width()
        parts = [
            f"universe={universe}",
            f"sizes={self.min_size}..{hi}",
            f"mode={self.mode}",
        ]
        if self.mstd_only:
            parts.append("filter=mstd")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.label() if self.group else None,
            "ints": list(self.ints) if self.ints else None,
            "min_size": self.min_size,
            "max_size": self.max_size,
            "mode": self.mode,
            "mstd_only": self.mstd_only,
        }


# -- orbit machinery ---------------------------------------------------------


def _group_orbit(g: GroupSpec, mask: int, mode: str) -> Iterator[int]:
    if mode == MODE_NONE:
        yield mask
        return
    if mode == MODE_TRANSLATION:
        seeds = (mask,)
    elif mode == MODE_TRANSLATION_NEGATION:
        seeds = (mask, g.neg_mask(mask))
    else:
        seeds = tuple(g.scale_mask(mask, u) for u in g.units())
    for s in seeds:
        for t in g.elements():
            yield g.shift_mask(s, t)


def _reflect(mask: int) -> int:
    """Mirror a min-normalized integer-set mask: the image of S under max - S."""
    span = mask.bit_length() - 1
    out = 0
    for b in iter_bits(mask):
        out |= 1 << (span - b)
    return out


def _int_canonical(mask: int, mode: str) -> bool:
    if mode == MODE_NONE:
        return True
    if mask & 1 == 0:  # canonical translate hugs the window's left edge
        return False
    if mode == MODE_TRANSLATION:
        return True
    return mask <= _reflect(mask)


def _int_orbit_size(mask: int, width: int, mode: str) -> int:
    if mode == MODE_NONE:
        return 1
    span = mask.bit_length() - 1
    translates = width - span
    if mode == MODE_TRANSLATION:
        return translates
    return translates if _reflect(mask) == mask else 2 * translates


def _canonical_masks(campaign: Campaign, lo_mask: int, hi_mask: int) -> Iterator[tuple[int, int]]:
    """Yield (representative mask, orbit size) with masks ascending in [lo, hi)."""
    hi_size = campaign.max_size if campaign.max_size is not None else campaign.width()
    if campaign.group is not None:
        g = campaign.group
        for mask in range(max(lo_mask, 1), hi_mask):
            if not campaign.min_size <= mask.bit_count() <= hi_size:
                continue
            orbit = set(_group_orbit(g, mask, campaign.mode))
            if mask == min(orbit):
                yield mask, len(orbit)
    else:
        width = campaign.width()
        for mask in range(max(lo_mask, 1), hi_mask):
            if not campaign.min_size <= mask.bit_count() <= hi_size:
                continue
            if _int_canonical(mask, campaign.mode):
                yield mask, _int_orbit_size(mask, width, campaign.mode)


def enumerate_canonical(campaign: Campaign):
    """Stream one representative per orbit, in ascending-mask order.

    Group campaigns yield GSets; integer campaigns yield tuples of integers.
    """
    campaign.validate()
    if campaign.group is not None:
        for mask, _ in _canonical_masks(campaign, 1, 1 << campaign.width()):
            yield GSet.from_mask(campaign.group, mask)
    else:
        lo = campaign.ints[0]
        for mask, _ in _canonical_masks(campaign, 1, 1 << campaign.width()):
            yield tuple(b + lo for b in iter_bits(mask))


# -- records -----------------------------------------------------------------


def _exponents(sig: Fraction, dlt: Fraction) -> tuple[float | None, float | None]:
    if sig == 1 or dlt == 1:
        return None, None
    ls = math.log(sig.numerator / sig.denominator)
    ld = math.log(dlt.numerator / dlt.denominator)
    return ls / ld, ld / ls


def _make_record(
    label: str,
    elements: tuple[int, ...],
    a: int,
    s: int,
    d: int,
    coset: bool,
    orbit_size: int,
) -> SearchRecord:
    sig = Fraction(s, a)
    dlt = Fraction(d, a)
    up, down = _exponents(sig, dlt)
    return SearchRecord(
        group=label,
        elements=elements,
        card=a,
        sum_card=s,
        diff_card=d,
        sigma=sig,
        delta=dlt,
        coset=coset,
        mstd=s > d,
        balanced=s == d,
        eq_upper=d * a == s * s,
        eq_lower=s * a == d * d,
        exponent_up=up,
        exponent_down=down,
        orbit_size=orbit_size,
    )


def _record_for_group_mask(g: GroupSpec, mask: int, orbit_size: int) -> SearchRecord:
    A = GSet.from_mask(g, mask)
    return _make_record(
        g.label(),
        A.elements(),
        A.card,
        sumset(A, A).card,
        diffset(A, A).card,
        is_coset(A) is not None,
        orbit_size,
    )


def _record_for_int_mask(mask: int, lo: int, orbit_size: int) -> SearchRecord:
    pts = tuple(b + lo for b in iter_bits(mask))
    _, A = embed_integer_set(pts, 1, 1)
    a = A.card
    s = sumset(A, A).card
    d = diffset(A, A).card
    # in the integers only singletons are cosets of a finite subgroup
    return _make_record("Z", pts, a, s, d, a == 1, orbit_size)


# -- scanning ----------------------------------------------------------------


@dataclass
class _Stats:
    universe: int = 0
    representatives: int = 0
    coset: int = 0
    mstd: int = 0
    diff_dominant: int = 0
    balanced: int = 0
    eq_upper: int = 0
    eq_lower: int = 0
    rep_coset: int = 0
    rep_mstd: int = 0
    rep_diff_dominant: int = 0
    rep_balanced: int = 0
    rep_eq_upper: int = 0
    rep_eq_lower: int = 0
    max_up: float | None = None
    argmax_up: tuple[str, ...] = ()
    max_down: float | None = None
    argmax_down: tuple[str, ...] = ()

    def absorb(self, r: SearchRecord) -> None:
        w = r.orbit_size
        self.universe += w
        self.representatives += 1
        if r.coset:
            self.coset += w
            self.rep_coset += 1
        if r.mstd:
            self.mstd += w
            self.rep_mstd += 1
        elif not r.balanced:
            self.diff_dominant += w
            self.rep_diff_dominant += 1
        else:
            self.balanced += w
            self.rep_balanced += 1
        if r.eq_upper:
            self.eq_upper += w
            self.rep_eq_upper += 1
        if r.eq_lower:
            self.eq_lower += w
            self.rep_eq_lower += 1
        if not r.coset and r.exponent_up is not None:
            if self.max_up is None or r.exponent_up > self.max_up:
                self.max_up, self.argmax_up = r.exponent_up, (r.set_literal(),)
            elif r.exponent_up == self.max_up:
                self.argmax_up += (r.set_literal(),)
            if self.max_down is None or r.exponent_down > self.max_down:
                self.max_down, self.argmax_down = r.exponent_down, (r.set_literal(),)
            elif r.exponent_down == self.max_down:
                self.argmax_down += (r.set_literal(),)

    def merge(self, other: "_Stats") -> None:
        for name in (
            "universe",
            "representatives",
            "coset",
            "mstd",
            "diff_dominant",
            "balanced",
            "eq_upper",
            "eq_lower",
            "rep_coset",
            "rep_mstd",
            "rep_diff_dominant",
            "rep_balanced",
            "rep_eq_upper",
            "rep_eq_lower",
        ):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        for max_name, arg_name in (("max_up", "argmax_up"), ("max_down", "argmax_down")):
            om, oa = getattr(other, max_name), getattr(other, arg_name)
            sm = getattr(self, max_name)
            if om is None:
                continue
            if sm is None or om > sm:
                setattr(self, max_name, om)
                setattr(self, arg_name, oa)
            elif om == sm:
                setattr(self, arg_name, getattr(self, arg_name) + oa)


@dataclass(frozen=True)
class ScanSummary:
    representatives: int
    universe: int
    counts: dict  # orbit-weighted, i.e. pre-dedup universe counts
    rep_counts: dict
    max_exponent_up: float | None
    argmax_up: tuple[str, ...]
    max_exponent_down: float | None
    argmax_down: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "representatives": self.representatives,
            "universe": self.universe,
            "counts": dict(self.counts),
            "rep_counts": dict(self.rep_counts),
            "max_exponent_up": self.max_exponent_up,
            "argmax_up": list(self.argmax_up),
            "max_exponent_down": self.max_exponent_down,
            "argmax_down": list(self.argmax_down),
        }


def _summary_from(stats: _Stats) -> ScanSummary:
    return ScanSummary(
        representatives=stats.representatives,
        universe=stats.universe,
        counts={
            "coset": stats.coset,
            "sum_dominant": stats.mstd,
            "diff_dominant": stats.diff_dominant,
            "balanced": stats.balanced,
            "eq_upper": stats.eq_upper,
            "eq_lower": stats.eq_lower,
        },
        rep_counts={
            "coset": stats.rep_coset,
            "sum_dominant": stats.rep_mstd,
            "diff_dominant": stats.rep_diff_dominant,
            "balanced": stats.rep_balanced,
            "eq_upper": stats.rep_eq_upper,
            "eq_lower": stats.rep_eq_lower,
        },
        max_exponent_up=stats.max_up,
        argmax_up=stats.argmax_up,
        max_exponent_down=stats.max_down,
        argmax_down=stats.argmax_down,
    )


def _scan_chunk(campaign: Campaign, lo_mask: int, hi_mask: int) -> tuple[list, _Stats]:
    records = []
    stats = _Stats()
    lo_int = campaign.ints[0] if campaign.ints else 0
    for mask, orbit_size in _canonical_masks(campaign, lo_mask, hi_mask):
        if campaign.group is not None:
            rec = _record_for_group_mask(campaign.group, mask, orbit_size)
        else:
            rec = _record_for_int_mask(mask, lo_int, orbit_size)
        stats.absorb(rec)
        if not campaign.mstd_only or rec.mstd:
            records.append(rec)
    return records, stats


# Below this, parallel fan-out costs more than it saves.
_PARALLEL_THRESHOLD = 1 << 14


def scan(
    campaign: Campaign,
    *,
    threads: int = 1,
    mask_range: tuple[int, int] | None = None,
) -> tuple[list, ScanSummary]:
    """Run a campaign; returns (records, summary).

    Records are canonical representatives in ascending-mask order (filtered
    when the campaign asks for it); summary counts are orbit-weighted so they
    describe the raw universe. ``mask_range`` restricts to a half-open window
    of representative masks for resumable partitioning; ``threads`` > 1
    partitions the range over worker processes with a deterministic merge.
    """
    campaign.validate()
    full = (1, 1 << campaign.width())
    lo, hi = mask_range if mask_range is not None else full
    lo, hi = max(lo, 1), min(hi, full[1])
    if threads > 1 and hi - lo >= _PARALLEL_THRESHOLD:
        chunk = (hi - lo + threads - 1) // threads
        spans = [(lo + i * chunk, min(lo + (i + 1) * chunk, hi)) for i in range(threads)]
        spans = [s for s in spans if s[0] < s[1]]
        stats = _Stats()
        records = []
        with ProcessPoolExecutor(max_workers=len(spans)) as pool:
            for recs, st in pool.map(_scan_chunk, *zip(*((campaign, a, b) for a, b in spans))):
                records.extend(recs)
                stats.merge(st)
    else:
        records, stats = _scan_chunk(campaign, lo, hi)
    return records, _summary_from(stats)


def find_mstd(
    *,
    group: GroupSpec | None = None,
    ints: tuple[int, int] | None = None,
    max_size: int | None = None,
    mode: str = MODE_TRANSLATION_NEGATION,
    group_cap: int = 24,
    width_cap: int = 16,
    threads: int = 1,
) -> list:
    """All sum-dominant representatives, largest surplus |A+A| - |A-A| first."""
    campaign = Campaign(
        group=group,
        ints=ints,
        max_size=max_size,
        mode=mode,
        mstd_only=True,
        group_cap=group_cap,
        width_cap=width_cap,
    )
    records, _ = scan(campaign, threads=threads)
    return sorted(records, key=lambda r: r.diff_card - r.sum_card)  # stable: canonical order kept


# -- exponent reporting -------------------------------------------------------


@dataclass(frozen=True)
class ExponentReport:
    non_coset: int
    max_exponent_up: float | None
    argmax: tuple[SearchRecord, ...]
    reference: float

    def render(self) -> str:
        lines = ["exponent report"]
        if self.max_exponent_up is None:
            lines.append("  no non-coset sets; exponent undefined")
        else:
            lines.append(f"  non-coset records: {self.non_coset}")
            lines.append(f"  max log(sigma)/log(delta) = {self.max_exponent_up:.5f}")
            for r in self.argmax[:8]:
                lines.append(
                    f"    achieved by {r.set_literal()}  "
                    f"(|A|={r.card}, |A+A|={r.sum_card}, |A-A|={r.diff_card}, "
                    f"sigma={r.sigma}, delta={r.delta})"
                )
            if len(self.argmax) > 8:
                lines.append(f"    ... and {len(self.argmax) - 8} more with the same exponent")
        lines.append(
            f"  reference lower bound for the exponent (Penman-Wells): "
            f"{self.reference:.5f} = log(32/5)/log(26/5)"
        )
        lines.append("  note: desk-scale maxima are not expected to reach the reference bound")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "non_coset": self.non_coset,
            "max_exponent_up": self.max_exponent_up,
            "argmax": [r.to_json_dict() for r in self.argmax],
            "reference": round(self.reference, 5),
        }


def exponent_report(records) -> ExponentReport:
    """Maximum of log(sigma)/log(delta) over non-coset records, with context."""
    records = list(records)
    if not records:
        raise ValueError("exponent_report needs at least one record")
    non_coset = [r for r in records if not r.coset and r.exponent_up is not None]
    if not non_coset:
        return ExponentReport(0, None, (), PENMAN_WELLS_EXPONENT)
    best = max(r.exponent_up for r in non_coset)
    argmax = tuple(r for r in non_coset if r.exponent_up == best)
    return ExponentReport(len(non_coset), best, argmax, PENMAN_WELLS_EXPONENT)


# -- output ------------------------------------------------------------------


def write_csv(records, fh, campaign: Campaign | None = None) -> None:
    """Write records as CSV preceded by a tool/campaign header comment."""
    header = f"# sumdiff {VERSION}"
    if campaign is not None:
        header += " | " + campaign.describe()
    fh.write(header + "\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.csv_row())

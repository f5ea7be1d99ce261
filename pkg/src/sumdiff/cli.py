"""Command-line front end: constants | check | witness | scan | mstd.

Set literals look like "0,1,3@Z8" (element indices in a named group) or
"0,2,3,14@Z" (integer mode: the set is embedded into a cyclic group large
enough that the requested operation sees no wraparound; the chosen modulus is
echoed in the output). Group literals: "Z12", "Z2xZ3xZ5", case-insensitive.

Exit codes: 0 all holds, 1 usage/parse error, 2 cap exceeded, 3 violation
found. Machine formats (json, csv) are byte-stable for identical invocations;
human output shows exact fractions, with decimal renderings marked by "≈".
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from ._version import VERSION
from .errors import CapExceededError, ParseError, SumdiffError
from .explorer import (
    MODES,
    MODE_TRANSLATION_NEGATION,
    Campaign,
    exponent_report,
    find_mstd,
    scan,
    write_csv,
)
from .groups import GroupSpec, is_coset
from .petridis import extract_certificate, find_minimizer, replay_trace
from .ruzsa import build_injection, build_witness_table, check_surjective, verify_injective
from .sets import GSet, diffset, embed_integer_set, sumset
from .theorems import CLAIM_IDS, VIOLATED, run_claim, sweep_claim

__all__ = ["main", "console", "parse_group_literal", "parse_set_literal", "ParsedSet"]


# -- literal grammar -----------------------------------------------------------


def parse_group_literal(text: str, full_text: str | None = None, offset: int = 0) -> GroupSpec:
    full = full_text if full_text is not None else text
    if not text:
        raise ParseError("empty group literal", full, offset)
    moduli = []
    pos = offset
    for part in re.split(r"[xX]", text):
        m = re.fullmatch(r"[Zz](\d+)", part)
        if m is None:
            raise ParseError(f"expected a cyclic factor like 'Z6', got {part!r}", full, pos)
        n = int(m.group(1))
        if n < 1:
            raise ParseError("moduli must be >= 1", full, pos)
        moduli.append(n)
        pos += len(part) + 1
    return GroupSpec(tuple(moduli))


@dataclass
class ParsedSet:
    kind: str  # "group" | "ints"
    values: tuple[int, ...]
    group: GroupSpec | None

    def gset(self) -> GSet:
        if self.kind != "group":
            raise ValueError("integer-mode literal has no direct GSet")
        return GSet(self.group, self.values)


def parse_set_literal(text: str) -> ParsedSet:
    at = text.find("@")
    if at < 0:
        raise ParseError("missing '@group' suffix", text, len(text))
    head, tail = text[:at], text[at + 1 :]
    if not head:
        raise ParseError("empty element list", text, 0)
    tokens = []
    pos = 0
    for tok in head.split(","):
        if re.fullmatch(r"-?\d+", tok.strip()) is None:
            raise ParseError(f"expected an integer, got {tok!r}", text, pos)
        tokens.append((int(tok), pos))
        pos += len(tok) + 1
    if tail in ("Z", "z"):
        return ParsedSet("ints", tuple(v for v, _ in tokens), None)
    g = parse_group_literal(tail, text, at + 1)
    for v, p in tokens:
        if not 0 <= v < g.order:
            raise ParseError(f"element {v} out of range for {g.label()}", text, p)
    return ParsedSet("group", tuple(v for v, _ in tokens), g)


def _format_set(A: GSet) -> str:
    return str(A)


def _ratio(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _approx(f: Fraction) -> str:
    return f"≈ {f.numerator / f.denominator:.6g}"


# -- config ---------------------------------------------------------------------

_CONFIG_KEYS = {
    "minimizer_cap",
    "group_cap",
    "width_cap",
    "threads",
    "out_dir",
}


def load_config(path: str) -> dict:
    config = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParseError(f"config line {lineno}: expected key=value", line, 0)
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ParseError(f"config line {lineno}: unknown key {key!r}", line, 0)
            config[key] = value.strip()
    return config


def _cap(args, config: dict, key: str, default: int) -> int:
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in config:
        return int(config[key])
    return default


# -- output helpers --------------------------------------------------------------


def _open_out(args, config: dict):
    path = getattr(args, "out", None)
    if path is None:
        return sys.stdout, False
    out_dir = config.get("out_dir")
    if out_dir and not os.path.isabs(path):
        path = os.path.join(out_dir, path)
    return open(path, "w", encoding="utf-8"), True


def _print_json(payload: dict, fh) -> None:
    fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _print_lines(lines, fh) -> None:
    for line in lines:
        fh.write(line + "\n")


# -- embedding for integer-mode literals ------------------------------------------


def _embed_for(parsed: ParsedSet, arity: tuple[int, int]) -> tuple[GSet, int | None]:
    """Resolve a literal to a GSet; integer mode embeds with the given arity."""
    if parsed.kind == "group":
        return parsed.gset(), None
    g, A = embed_integer_set(parsed.values, *arity)
    return A, g.order


_CLAIM_ARITY = {
    "fact1": (1, 1),
    "ineq1": (1, 1),
    "thm1": (1, 1),
    "thm2": (1, 1),
    "thm3": (2, 1),
}


# -- subcommands -------------------------------------------------------------------


def _cmd_constants(args, config: dict) -> int:
    parsed = parse_set_literal(args.set)
    A, modulus = _embed_for(parsed, (1, 1))
    s = sumset(A, A).card
    d = diffset(A, A).card
    sig = Fraction(s, A.card)
    dlt = Fraction(d, A.card)
    coset = is_coset(A) is not None if parsed.kind == "group" else A.card == 1
    fh = sys.stdout
    if args.format == "json":
        payload = {
            "set": args.set,
            "group": parsed.group.label() if parsed.group else "Z",
            "sizes": {"A": A.card, "AA": s, "AmA": d},
            "sigma": [sig.numerator, sig.denominator],
            "delta": [dlt.numerator, dlt.denominator],
            "coset": coset,
        }
        if modulus is not None:
            payload["modulus"] = modulus
        _print_json(payload, fh)
    else:
        lines = [f"set      {args.set}"]
        if modulus is not None:
            lines.append(f"modulus  Z{modulus} (embedding, arity 1+1)")
        lines += [
            f"|A|      {A.card}",
            f"|A+A|    {s}",
            f"|A-A|    {d}",
            f"sigma    {_ratio(sig)} {_approx(sig)}",
            f"delta    {_ratio(dlt)} {_approx(dlt)}",
            f"coset    {str(coset).lower()}",
        ]
        _print_lines(lines, fh)
    return 0


def _verdict_lines(v) -> list:
    lines = [
        f"claim    {v.claim}",
        f"group    {v.group.label()}",
        f"set      {','.join(map(str, v.elements))}",
        f"outcome  {v.outcome}",
        "sizes    " + " ".join(f"{k}={val}" for k, val in v.sizes.items()),
        "ratios   " + " ".join(f"{k}={_ratio(val)}" for k, val in v.ratios.items()),
    ]
    links = v.details.get("links")
    if links:
        for i, link in enumerate(links, 1):
            lines.append(
                f"link{i}    {link['lhs']} {link['rel']} {link['rhs']}"
                f" ({'tight' if link['slack'] == 0 else 'slack ' + str(link['slack'])})"
            )
    return lines


def _cmd_check(args, config: dict) -> int:
    cap = _cap(args, config, "minimizer_cap", 20)
    if args.sweep is not None:
        g = parse_group_literal(args.sweep)
        summary = sweep_claim(
            args.claim,
            g,
            n=args.n,
            cap=cap,
            group_cap=_cap(args, config, "group_cap", 24),
            sample=args.sample,
            seed=args.seed,
        )
        if args.format == "json":
            _print_json(summary.to_json_dict(), sys.stdout)
        else:
            lines = [
                f"claim    {summary.claim}",
                f"group    {summary.group.label()}",
                f"total    {summary.total}",
            ]
            for outcome, count in summary.counts.items():
                lines.append(f"{outcome:<14} {count}")
            for lit in summary.violations:
                lines.append(f"violating set: {lit}")
            _print_lines(lines, sys.stdout)
        return 3 if summary.counts.get(VIOLATED) else 0
    if args.set is None:
        raise ParseError("check needs a set literal or --sweep GROUP", "", 0)
    parsed = parse_set_literal(args.set)
    arity = _CLAIM_ARITY.get(args.claim, (args.n + 1, 0))
    A, modulus = _embed_for(parsed, arity)
    v = run_claim(args.claim, A, n=args.n, cap=cap)
    if args.format == "json":
        payload = v.to_json_dict()
        if modulus is not None:
            payload["modulus"] = modulus
        _print_json(payload, sys.stdout)
    else:
        lines = _verdict_lines(v)
        if modulus is not None:
            lines.insert(1, f"modulus  Z{modulus} (embedding)")
        _print_lines(lines, sys.stdout)
    return 3 if v.outcome == VIOLATED else 0


def _cmd_witness(args, config: dict) -> int:
    parsed = parse_set_literal(args.set)
    if args.kind == "ruzsa":
        A, modulus = _embed_for(parsed, (1, 1))
        table = build_witness_table(A)
        inj = build_injection(A, table)
        injective = verify_injective(inj)
        surjective = check_surjective(inj)
        if args.format == "json":
            payload = {
                "set": args.set,
                "injective": injective,
                "surjective": surjective,
                "witness_map": [
                    {"w": w, "u": u, "v": v} for w, (u, v) in sorted(table.pairs.items())
                ],
                "injection_map": [
                    {"a": a, "u": u, "out1": o1, "out2": o2}
                    for (a, u), (o1, o2) in sorted(inj.pairs.items())
                ],
            }
            if modulus is not None:
                payload["modulus"] = modulus
            _print_json(payload, sys.stdout)
        else:
            lines = [f"set        {args.set}"]
            if modulus is not None:
                lines.append(f"modulus    Z{modulus} (embedding)")
            lines += [
                f"injective  {str(injective).lower()}",
                f"surjective {str(surjective).lower()}",
                f"domain     {len(inj.pairs)} pairs; codomain {sumset(A, A).card}^2",
            ]
            for w, (u, v) in sorted(table.pairs.items()):
                lines.append(f"  w={w}: u={u} v={v}")
            _print_lines(lines, sys.stdout)
        return 0
    # petridis
    cap = _cap(args, config, "minimizer_cap", 20)
    if parsed.kind == "ints":
        A, modulus = _embed_for(parsed, (2, 1))
        lo = min(parsed.values)
        span = max(parsed.values) - lo
        if args.C is not None:
            cpts = _parse_int_list(args.C)
            if any(not lo <= c <= lo + span for c in cpts):
                raise ParseError("--C values must lie within the set's own range", args.C, 0)
            C = GSet(A.group, (c - lo for c in cpts))
        else:
            C = A
    else:
        A, modulus = parsed.gset(), None
        C = GSet(A.group, _parse_int_list(args.C)) if args.C is not None else A
    base = GSet(A.group, _parse_int_list(args.base)) if args.base is not None else A.negate()
    mn = find_minimizer(A, base, cap=cap)
    order = C.elements() if args.order == "asc" else tuple(reversed(C.elements()))
    tr = replay_trace(A, mn.x, C, order)
    cert = extract_certificate(tr)
    if args.format == "json":
        payload = {
            "set": args.set,
            "X": list(mn.x),
            "K": [mn.k.numerator, mn.k.denominator],
            "strict_on_proper_subsets": mn.strict_on_proper_subsets,
            "order": list(tr.order),
            "steps": [
                {
                    "k": st.index,
                    "c_k": st.element,
                    "X_k": list(st.x_k),
                    "Y_k": list(st.y_k),
                    "lhs": st.lhs_size,
                    "rhs_num": (tr.k * st.xc_size).numerator,
                    "rhs_den": (tr.k * st.xc_size).denominator,
                    "equality_conditions": list(st.conditions),
                }
                for st in tr.steps
            ],
            "equality": tr.equality,
            "certificate": {"Q": list(cert.q)} if cert else None,
        }
        if modulus is not None:
            payload["modulus"] = modulus
        _print_json(payload, sys.stdout)
    else:
        lines = [f"set      {args.set}"]
        if modulus is not None:
            lines.append(f"modulus  Z{modulus} (embedding)")
        lines += [
            f"X        {{{','.join(map(str, mn.x))}}}",
            f"K        {_ratio(mn.k)} {_approx(mn.k)}",
            f"C        {{{','.join(map(str, C))}}} processed {args.order}ending",
        ]
        for st in tr.steps:
            rhs = tr.k * st.xc_size
            lines.append(
                f"step {st.index}: c={st.element} |X+A+C_k|={st.lhs_size}"
                f" K|X+C_k|={_ratio(rhs)}"
                f" X_k={{{','.join(map(str, st.x_k))}}}"
                f" Y_k={{{','.join(map(str, st.y_k))}}}"
                f" conditions={''.join('T' if c else 'F' for c in st.conditions)}"
            )
        lines.append(f"equality {str(tr.equality).lower()}")
        if cert:
            lines.append(f"Q        {{{','.join(map(str, cert.q))}}}")
        _print_lines(lines, sys.stdout)
    return 0


def _parse_int_list(text: str) -> tuple:
    out = []
    pos = 0
    for tok in text.split(","):
        if re.fullmatch(r"-?\d+", tok.strip()) is None:
            raise ParseError(f"expected an integer, got {tok!r}", text, pos)
        out.append(int(tok))
        pos += len(tok) + 1
    return tuple(out)


def _parse_ints_window(text: str) -> tuple:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if m is None:
        raise ParseError("expected an integer window like 0..14", text, 0)
    return int(m.group(1)), int(m.group(2))


def _parse_mask_range(text: str) -> tuple:
    m = re.fullmatch(r"(\d+):(\d+)", text.strip())
    if m is None:
        raise ParseError("expected a mask range like 1:4096", text, 0)
    return int(m.group(1)), int(m.group(2))


def _campaign_from(args, config: dict) -> Campaign:
    group = parse_group_literal(args.group) if args.group else None
    ints = _parse_ints_window(args.ints) if args.ints else None
    if group is None and ints is None:
        raise ParseError("need --group or --ints", "", 0)
    max_size = getattr(args, "max_size", None)
    min_size = getattr(args, "min_size", None) or 1
    return Campaign(
        group=group,
        ints=ints,
        min_size=min_size,
        max_size=max_size,
        mode=args.mode,
        mstd_only=getattr(args, "mstd", False),
        group_cap=_cap(args, config, "group_cap", 24),
        width_cap=_cap(args, config, "width_cap", 16),
    )


def _summary_lines(summary) -> list:
    lines = [
        f"representatives {summary.representatives}",
        f"universe        {summary.universe}",
    ]
    for key in ("coset", "sum_dominant", "diff_dominant", "balanced", "eq_upper", "eq_lower"):
        lines.append(f"{key:<15} {summary.counts[key]} ({summary.rep_counts[key]} reps)")
    if summary.max_exponent_up is not None:
        lines.append(f"max exponent_up   {summary.max_exponent_up:.5f} at {', '.join(summary.argmax_up)}")
        lines.append(f"max exponent_down {summary.max_exponent_down:.5f} at {', '.join(summary.argmax_down)}")
    return lines


def _threads(args, config: dict) -> int:
    if args.threads is not None:
        return args.threads
    if "threads" in config:
        return int(config["threads"])
    return os.cpu_count() or 1


def _cmd_scan(args, config: dict) -> int:
    campaign = _campaign_from(args, config)
    mask_range = _parse_mask_range(args.range) if args.range else None
    records, summary = scan(campaign, threads=_threads(args, config), mask_range=mask_range)
    fh, close = _open_out(args, config)
    try:
        if args.format == "csv":
            write_csv(records, fh, campaign)
        elif args.format == "json":
            payload = {
                "tool": f"sumdiff {VERSION}",
                "campaign": campaign.to_json_dict(),
                "summary": summary.to_json_dict(),
                "records": [r.to_json_dict() for r in records],
            }
            if args.exponents:
                payload["exponent_report"] = (
                    exponent_report(records).to_json_dict() if records else None
                )
            _print_json(payload, fh)
        else:
            lines = [f"sumdiff {VERSION} | {campaign.describe()}"]
            lines += _summary_lines(summary)
            if campaign.mstd_only:
                for r in records:
                    lines.append(
                        f"  {r.set_literal()}  |A+A|={r.sum_card} |A-A|={r.diff_card}"
                    )
            else:
                lines.append(f"records         {len(records)}")
            if args.exponents and records:
                lines.append(exponent_report(records).render())
            _print_lines(lines, fh)
    finally:
        if close:
            fh.close()
    return 0


def _cmd_mstd(args, config: dict) -> int:
    group = parse_group_literal(args.group) if args.group else None
    ints = _parse_ints_window(args.ints) if args.ints else None
    if group is None and ints is None:
        raise ParseError("need --group or --ints", "", 0)
    records = find_mstd(
        group=group,
        ints=ints,
        max_size=args.max_size,
        mode=args.mode,
        group_cap=_cap(args, config, "group_cap", 24),
        width_cap=_cap(args, config, "width_cap", 16),
        threads=_threads(args, config),
    )
    fh, close = _open_out(args, config)
    try:
        if args.format == "csv":
            write_csv(records, fh)
        elif args.format == "json":
            _print_json({"records": [r.to_json_dict() for r in records]}, fh)
        else:
            if not records:
                _print_lines(["no sum-dominant sets found"], fh)
            else:
                _print_lines(
                    [
                        f"{r.set_literal()}  |A+A|={r.sum_card} |A-A|={r.diff_card}"
                        f" surplus={r.sum_card - r.diff_card}"
                        for r in records
                    ],
                    fh,
                )
    finally:
        if close:
            fh.close()
    return 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumdiff",
        description="exact workbench for sumset/difference-set combinatorics",
    )
    parser.add_argument("--version", action="version", version=f"sumdiff {VERSION}")
    parser.add_argument("--config", help="key=value config file (caps, out_dir)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="sigma, delta and the set sizes")
    p.add_argument("set", help="set literal, e.g. 0,1,3@Z8 or 0,2,3,14@Z")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("check", help="verify one claim on a set or sweep a group")
    p.add_argument("claim", choices=CLAIM_IDS)
    p.add_argument("set", nargs="?", help="set literal (omit with --sweep)")
    p.add_argument("--sweep", metavar="GROUP", help="run over every non-empty subset")
    p.add_argument("--n", type=int, default=2, help="iterated-sum exponent for thm5")
    p.add_argument("--sample", type=int, help="sample size for large sweeps")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    p.add_argument("--minimizer-cap", dest="minimizer_cap", type=int)
    p.add_argument("--group-cap", dest="group_cap", type=int)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("witness", help="dump the injection tables or an induction trace")
    p.add_argument("kind", choices=("ruzsa", "petridis"))
    p.add_argument("set", help="set literal")
    p.add_argument("--C", help="elements of C, e.g. 0,1 (default: A itself)")
    p.add_argument("--base", help="minimizer base elements (default: -A)")
    p.add_argument("--order", choices=("asc", "desc"), default="asc")
    p.add_argument("--minimizer-cap", dest="minimizer_cap", type=int)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("scan", help="enumerate canonical subsets and their statistics")
    p.add_argument("--group", help="group literal, e.g. Z10")
    p.add_argument("--ints", help="integer window, e.g. 0..14")
    p.add_argument("--all", action="store_true", help="every non-empty subset (default)")
    p.add_argument("--min-size", dest="min_size", type=int)
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--mode", choices=MODES, default=MODE_TRANSLATION_NEGATION)
    p.add_argument("--mstd", action="store_true", help="keep only sum-dominant records")
    p.add_argument("--exponents", action="store_true", help="append the exponent report")
    p.add_argument("--range", help="representative mask range LO:HI for partitioning")
    p.add_argument("--threads", type=int, help="worker processes (default: all cores)")
    p.add_argument("--group-cap", dest="group_cap", type=int)
    p.add_argument("--width-cap", dest="width_cap", type=int)
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("mstd", help="list sum-dominant sets, largest surplus first")
    p.add_argument("--group", help="group literal")
    p.add_argument("--ints", help="integer window, e.g. 0..14")
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--mode", choices=MODES, default=MODE_TRANSLATION_NEGATION)
    p.add_argument("--threads", type=int, help="worker processes (default: all cores)")
    p.add_argument("--group-cap", dest="group_cap", type=int)
    p.add_argument("--width-cap", dest="width_cap", type=int)
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_mstd)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    config = {}
    try:
        if args.config:
            config = load_config(args.config)
        return args.func(args, config)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SumdiffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console() -> None:
    sys.exit(main())

"""Command-line front end.

Output is JSON unless ``--text`` is given.  Exit codes: 0 success,
1 engine/oracle mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .conjecture import conjecture_sweep
from .errors import DomainError, PatternLabError
from .genfun import (
    FAMILIES, OccurrenceSpec, avoid_decreasing_cf, cf_series, decreasing_closed,
    family_closed, fixed_points_cf, ft_series, inversions_cf, layered_closed,
    lrmax_cf, occurrence_gf, total_decreasing_cf,
)
from .motzkin import MotzkinPath, generate_paths, phi, phi_inverse
from .oracle import count_avoiders, count_with_occurrences
from .permcore import PatternSet, decreasing, format_perm, parse_perm, parse_pattern_set
from .polyalg import PowerSeries, RatFunc
from .tables import verify_tables

MISMATCH = 1
USAGE = 2


class UsageError(Exception):
    pass


def series_to_json(ts: PatternSet, s: PowerSeries) -> dict[str, Any]:
    return {"pattern_set": ts.key, "order": s.order, "coefficients": s.to_json()}


def series_from_json(data: dict[str, Any]) -> tuple[PatternSet, PowerSeries]:
    key = data["pattern_set"]
    ts = parse_pattern_set("" if key == "{}" else key.replace("[", "").replace("]", ""))
    return ts, PowerSeries([int(c) for c in data["coefficients"]], data["order"])


def _patterns(text: str) -> PatternSet:
    try:
        return parse_pattern_set(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _table(rows: list[Sequence[Any]], header: Sequence[str]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


# -- commands; each returns (payload, text, exit code) --

def cmd_count(args) -> tuple[Any, str, int]:
    ts = _patterns(args.avoid)
    if args.n < 0:
        raise UsageError(f"--n must be nonnegative, got {args.n}")
    counts = [count_avoiders(ts, n, args.limit) for n in range(args.n + 1)]
    engine = ft_series(ts, args.n).coefficients
    agree = list(engine) == counts
    payload = {"pattern_set": ts.key, "n": args.n, "count": str(counts[-1]),
               "counts": [str(c) for c in counts], "engine_agrees": agree}
    rows = [(n, c, e) for n, (c, e) in enumerate(zip(counts, engine))]
    text = _table(rows, ("n", "oracle", "engine"))
    return payload, text, 0 if agree else MISMATCH


def cmd_series(args) -> tuple[Any, str, int]:
    ts = _patterns(args.avoid)
    s = ft_series(ts, args.order)
    text = _table(list(enumerate(s.coefficients)), ("n", "coefficient"))
    return series_to_json(ts, s), text, 0


def _closed_target(args) -> tuple[str, RatFunc]:
    if args.family is not None:
        if args.k is None:
            raise UsageError("--family needs --k")
        return f"{args.family} (k = {args.k})", family_closed(args.family, args.k)
    if args.decreasing is not None:
        return f"{args.decreasing}...1", decreasing_closed(args.decreasing)
    if args.layered is not None:
        lengths = []
        for tok in args.layered.split(","):
            if not tok.strip().isdigit():
                raise UsageError(f"bad layer length {tok!r}")
            lengths.append(int(tok))
        return f"layered {lengths}", layered_closed(*lengths)
    raise UsageError("closed needs one of --family, --decreasing, --layered")


def cmd_closed(args) -> tuple[Any, str, int]:
    name, f = _closed_target(args)
    payload: dict[str, Any] = {"target": name, "gf": f.to_json(), "formatted": str(f)}
    text = f"{name}: {f}"
    if args.order is not None:
        s = f.series(args.order)
        payload["coefficients"] = s.to_json()
        text += "\n" + " ".join(s.to_json())
    return payload, text, 0


_CF = {
    "inv": lambda m: inversions_cf(),
    "m": lambda m: total_decreasing_cf(),
    "lrmax": lambda m: lrmax_cf(),
    "rlmin": lambda m: lrmax_cf(),
    "fix": lambda m: fixed_points_cf(),
    "avoid": lambda m: avoid_decreasing_cf(m),
}


def cmd_cf(args) -> tuple[Any, str, int]:
    if args.stat == "avoid" and args.m is None:
        raise UsageError("--stat avoid needs --m")
    coeffs = cf_series(_CF[args.stat](args.m), args.order)
    payload = {"stat": args.stat, "order": args.order,
               "coefficients": [c.to_json() for c in coeffs]}
    text = _table([(n, c.format("q")) for n, c in enumerate(coeffs)], ("n", "polynomial in q"))
    return payload, text, 0


def cmd_occurrences(args) -> tuple[Any, str, int]:
    spec = OccurrenceSpec.for_length(args.length, args.r)
    f = occurrence_gf(spec)
    s = f.series(args.order)
    payload: dict[str, Any] = {"pattern": format_perm(decreasing(args.length)), "r": args.r,
                               "gf": f.to_json(), "order": args.order,
                               "coefficients": s.to_json()}
    code = 0
    rows = [[n, c] for n, c in enumerate(s.coefficients)]
    if args.check is not None:
        top = min(args.check, args.order)
        brute = [count_with_occurrences(decreasing(args.length), args.r, n, args.limit)
                 for n in range(top + 1)]
        payload["oracle"] = [str(v) for v in brute]
        if brute != list(s.coefficients[: top + 1]):
            code = MISMATCH
        for n, v in enumerate(brute):
            rows[n].append(v)
    header = ("n", "gf") + (("oracle",) if args.check is not None else ())
    rows = [r + [""] * (len(header) - len(r)) for r in rows]
    return payload, f"gf = {f}\n" + _table(rows, header), code


def cmd_phi(args) -> tuple[Any, str, int]:
    if args.path is not None:
        try:
            path = MotzkinPath(args.path.strip())
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        perm = phi(path)
    else:
        try:
            perm = parse_perm(args.perm)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        path = phi_inverse(perm)
    payload = {"path": path.steps, "permutation": format_perm(perm)}
    return payload, f"{path.steps} -> {format_perm(perm)}", 0


def cmd_paths(args) -> tuple[Any, str, int]:
    rows = [(p.steps, format_perm(phi(p))) for p in generate_paths(args.n, args.limit)]
    payload = {"n": args.n, "count": len(rows),
               "paths": [{"path": a, "permutation": b} for a, b in rows]}
    return payload, _table(rows, ("path", "phi")), 0


def cmd_verify_tables(args) -> tuple[Any, str, int]:
    report = verify_tables(args.n_max, limit=args.limit)
    return report.to_json(), report.to_text(), 0 if report.ok else MISMATCH


def cmd_conjecture(args) -> tuple[Any, str, int]:
    report = conjecture_sweep(args.m, args.l_max, args.order)
    return report.to_json(), report.to_text(), 0


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", default=False,
                     help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", default=False,
                     help="aligned text output")
    common.add_argument("--limit", type=_nonneg, default=None,
                        help="enumeration cap (default PATTERNLAB_LIMIT or 14)")

    parser = argparse.ArgumentParser(prog="patternlab",
                                     description="Pattern avoidance in 3412-avoiding involutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="oracle counts for n = 0..N")
    p.add_argument("--avoid", required=True, help="comma-separated patterns")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", parents=[common], help="F_T series from the engine")
    p.add_argument("--avoid", required=True)
    p.add_argument("--order", "-N", type=_nonneg, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("closed", parents=[common], help="closed-form generating functions")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--k", type=int)
    p.add_argument("--decreasing", type=int, metavar="M")
    p.add_argument("--layered", metavar="L1,L2,...")
    p.add_argument("--order", "-N", type=_nonneg)
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("cf", parents=[common], help="continued-fraction statistic series")
    p.add_argument("--stat", choices=sorted(_CF), required=True)
    p.add_argument("--m", type=int, help="decreasing pattern length for --stat avoid")
    p.add_argument("--order", "-N", type=_nonneg, required=True)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("occurrences", parents=[common],
                       help="exactly r copies of a decreasing pattern")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--order", "-N", type=_nonneg, required=True)
    p.add_argument("--check", type=_nonneg, metavar="N", help="compare with the oracle up to N")
    p.set_defaults(func=cmd_occurrences)

    p = sub.add_parser("phi", parents=[common], help="path <-> involution bijection")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--path")
    g.add_argument("--perm")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("paths", parents=[common], help="all Motzkin paths of length n with images")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify-tables", parents=[common], help="check the enumeration tables")
    p.add_argument("--n-max", "--n", dest="n_max", type=_nonneg, default=10)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("conjecture", parents=[common], help="layer-order symmetry sweep")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--l-max", type=int, default=5)
    p.add_argument("--order", "-N", type=_nonneg, default=15)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on malformed flags
    try:
        payload, text, code = args.func(args)
    except (UsageError, PatternLabError) as exc:
        print(f"patternlab {args.command}: error: {exc}", file=sys.stderr)
        return USAGE
    if args.text:
        print(text)
    else:
        print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())

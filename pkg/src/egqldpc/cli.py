"""Command line entry point: ``egqldpc <command> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from egqldpc.alist import read_alist, write_alist
from egqldpc.binmat import (
    DEFAULT_WEIGHT_CAP,
    count_four_cycles_by_columns,
    four_cycle_counts,
    is_self_orthogonal,
    min_distance_exhaustive,
    overlap_profile,
    rank_gf2,
    tanner_girth,
)
from egqldpc.construct import build_matrix, code_summary
from egqldpc.quantum import NotSelfOrthogonalError, css_from_self_orthogonal, write_stabilizers
from egqldpc.sim import SimConfig, run_trials, write_results


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)


def cmd_construct(args) -> int:
    h = build_matrix(args.q, args.m, args.ell, args.type)
    write_alist(h, args.out)
    print(f"wrote {args.type} matrix {h.rows}x{h.cols} to {args.out}")
    return 0


def cmd_params(args) -> int:
    spec = code_summary(args.q, args.m, args.ell)
    h = build_matrix(args.q, args.m, args.ell, "orth")
    rank = rank_gf2(h)
    report = is_self_orthogonal(h)
    rows = [
        ("n", spec.n),
        ("N", spec.N),
        ("rho", spec.rho),
        ("lambda", spec.lam),
        ("class_count", spec.class_count),
        ("parity_case", spec.parity_case),
        ("rank", rank),
        ("k_nominal", spec.k_nominal),
        ("k_exact", spec.N - 2 * rank),
        ("d_type1_lower", spec.d_type1_lower),
        ("d_orth_lower", spec.d_orth_lower),
        ("self_orthogonal", "yes" if report.ok else f"no (rows {report.pair[0]}, {report.pair[1]})"),
    ]
    for k, v in rows:
        print(f"{k:16s} {v}")
    if spec.k_nominal <= 0:
        print("warning: nominal dimension N - 2n is not positive")
    return 0


def cmd_verify(args) -> int:
    h = read_alist(args.path)
    print(f"matrix {h.rows}x{h.cols}")
    if args.check == "selforth":
        rep = is_self_orthogonal(h)
        if rep.ok:
            print("self-orthogonal: yes")
        else:
            print(f"self-orthogonal: no, rows {rep.pair[0]} and {rep.pair[1]} have odd inner product")
        return 0 if rep.ok else 1
    if args.check == "overlap":
        prof = overlap_profile(h)
        for value, count in prof.histogram.items():
            print(f"overlap {value}: {count} row pairs")
        uniform = len(prof.histogram) == 1
        print("uniform: " + ("yes" if uniform else "no"))
        return 0 if uniform else 1
    if args.check == "cycles":
        per_pair = four_cycle_counts(h)
        total = int(per_pair.sum())
        print(f"4-cycles: {total} (column count cross-check {count_four_cycles_by_columns(h)})")
        worst = int(per_pair.max()) if h.rows > 1 else 0
        print(f"max 4-cycles per row pair: {worst}")
        return 0 if worst <= 1 else 1
    if args.check == "girth":
        g = tanner_girth(h)
        print(f"girth: {g}")
        return 0 if g >= 6 else 1
    if args.check == "weights":
        rw = sorted(set(h.row_weights().tolist()))
        cw = sorted(set(h.col_weights().tolist()))
        print(f"row weights: {rw}")
        print(f"column weights: {cw}")
        return 0 if len(rw) == 1 and len(cw) == 1 else 1
    raise AssertionError(args.check)


def cmd_distance(args) -> int:
    h = read_alist(args.path)
    res = min_distance_exhaustive(h, weight_cap=args.cap)
    if res.status == "no_codeword":
        print("no nonzero codeword")
    elif res.status == "exceeds_cap":
        print(f"distance > {args.cap if args.cap is not None else DEFAULT_WEIGHT_CAP} (search capped)")
    else:
        print(f"distance {res.distance}")
    return 0


def cmd_simulate(args) -> int:
    cfg = SimConfig.load(args.config)
    result = run_trials(cfg, workers=args.workers)
    write_results(result, args.out, "csv")
    if args.json:
        write_results(result, args.json, "json")
    for pt in result.points:
        print(f"p={pt.p:g} rate={pt.rate:.4g} [{pt.ci_lo:.4g}, {pt.ci_hi:.4g}] nonconverged={pt.nonconverged}")
    return 0


def cmd_export(args) -> int:
    if not args.stabilizers:
        print("nothing to export; pass --stabilizers", file=sys.stderr)
        return 2
    spec = code_summary(args.q, args.m, args.ell)
    h = build_matrix(args.q, args.m, args.ell, "orth")
    try:
        code = css_from_self_orthogonal(h, spec)
    except NotSelfOrthogonalError as exc:
        print(f"cannot build stabilizer code: {exc}", file=sys.stderr)
        return 1
    write_stabilizers(code, args.out)
    print(f"wrote {2 * h.rows} generators of {code.params()} to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="egqldpc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a parity-check matrix and write it as alist")
    _add_code_args(p)
    p.add_argument("--type", choices=["type1", "type2", "orth"], default="orth")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("params", help="print code parameters")
    _add_code_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="check a structural property of an alist matrix")
    p.add_argument("path", type=Path)
    p.add_argument("--check", choices=["selforth", "overlap", "cycles", "girth", "weights"], required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="minimum distance of the null space")
    p.add_argument("path", type=Path)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("simulate", help="Monte Carlo decoding sweep")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--json", type=Path, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("export", help="write stabilizer generators as Pauli strings")
    _add_code_args(p)
    p.add_argument("--stabilizers", action="store_true")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

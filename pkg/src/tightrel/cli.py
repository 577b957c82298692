"""Command-line front end.

Every verb is a thin adapter over a library call; nothing here computes.
Exit codes: 0 for success and true verdicts, 1 for false or ruled-out
verdicts (so shell scripts can branch on the result), 2 for usage errors,
3 for I/O and parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .analysis import is_tight
from .designs import (
    Design,
    DesignParams,
    FormatError,
    complement,
    construct_paley_hadamard,
    construct_witt_23,
    derived,
    design_text,
    extend_pair,
    is_t_design,
    load_design,
    residual,
    save_design,
)
from .feasibility import (
    annotate_existence,
    brc_test,
    driessen_test,
    rows_to_tsv,
    scan_relative3,
    scan_relative4,
    symmetric_square_test,
)
from .hamming import load_candidate, relative_design_oracle
from .profiles import conjecture2_scan, lambda_sequence


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_design(design: Design, out) -> int:
    if out:
        save_design(design, out)
    else:
        sys.stdout.write(design_text(design))
    return 0


def _cmd_verify(args) -> int:
    design = load_design(args.file)
    ok, lams = is_t_design(design, args.t)
    if ok:
        print(f"t-design: true  lambda=[{','.join(str(v) for v in lams)}]")
        return 0
    print("t-design: false")
    return 1


def _cmd_check_relative(args) -> int:
    cand, file_t = load_candidate(args.file, allow_trivial=args.allow_trivial)
    t = args.t if args.t is not None else file_t
    ok, witness = relative_design_oracle(cand, t)
    if ok:
        print("relative-design: true")
    else:
        s, subset = witness
        print(
            "relative-design: false  witness: "
            f"s={s} S=({','.join(str(i) for i in subset)})"
        )
    code = 0 if ok else 1
    if args.tight:
        tight = is_tight(cand, t)
        print(f"tight: {'true' if tight else 'false'}")
        if not tight:
            code = 1
    return code


def _cmd_lambda_seq(args) -> int:
    design = load_design(args.file)
    seq = lambda_sequence(design, args.t)
    print(" ".join(f"{count}*{value}" for value, count in seq.entries))
    return 0


def _cmd_scan3(args) -> int:
    cases = frozenset(int(tok) for tok in args.cases.split(","))
    rows = scan_relative3(args.max_n, cases, threads=args.threads)
    if args.annotate:
        rows = annotate_existence(rows)
    _emit(rows_to_tsv(rows), args.out)
    return 0


def _cmd_scan4(args) -> int:
    rows = scan_relative4(args.max_n, threads=args.threads)
    if args.annotate:
        rows = annotate_existence(rows)
    _emit(rows_to_tsv(rows), args.out)
    return 0


def _cmd_nonexist(args) -> int:
    try:
        v, k, lam = (int(tok) for tok in args.params.split(","))
    except ValueError:
        raise ValueError(f"--params must be v,k,lam; got {args.params!r}") from None
    params = DesignParams(v, k, lam, args.t)
    if args.t == 3:
        verdict = driessen_test(params)
    elif v % 2 == 0:
        verdict = symmetric_square_test(params)
    else:
        verdict = brc_test(params)
    print(verdict.detail)
    return 1 if verdict.outcome == "RuledOut" else 0


def _cmd_construct(args) -> int:
    what = args.what
    if what == "fano":
        return _emit_design(construct_paley_hadamard(7), args.out)
    if what == "paley":
        return _emit_design(construct_paley_hadamard(args.q), args.out)
    if what == "witt23":
        return _emit_design(construct_witt_23(), args.out)
    if what == "complement":
        return _emit_design(complement(load_design(args.file)), args.out)
    if what == "derived":
        return _emit_design(derived(load_design(args.file), args.point), args.out)
    if what == "residual":
        return _emit_design(residual(load_design(args.file), args.point), args.out)
    if what == "extend":
        return _emit_design(
            extend_pair(load_design(args.file_a), load_design(args.file_b)), args.out
        )
    raise AssertionError(what)


def _cmd_conjecture2(args) -> int:
    paths = sorted(Path(args.dir).glob("*.blk"))
    if not paths:
        raise FormatError(f"no .blk files in {args.dir}")
    designs = [load_design(p) for p in paths]
    pairs = conjecture2_scan(designs, args.t)
    lines = [f"{paths[i].name}\t{paths[j].name}" for i, j in pairs]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _add_out(p) -> None:
    p.add_argument("--out", help="write to this path instead of stdout")


def _add_transform_subcommands(sub) -> None:
    p = sub.add_parser("complement", help="complement every block")
    p.add_argument("file")
    _add_out(p)
    for name, hint in (("derived", "blocks through the point, point removed"),
                       ("residual", "blocks missing the point")):
        p = sub.add_parser(name, help=hint)
        p.add_argument("file")
        p.add_argument("point", type=int)
        _add_out(p)
    p = sub.add_parser("extend", help="adjoin a new point to every block of the first file, then append the second")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _add_out(p)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightrel",
        description="verify, construct, and scan block designs and two-shell relative designs",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check a block file for t-design balance")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-relative", help="run the two-shell moment oracle on a candidate file")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=None, help="override the strength declared in the file")
    p.add_argument("--tight", action="store_true", help="also require the minimal-size bound with equality")
    p.add_argument("--allow-trivial", action="store_true", help="accept shells outside 2 <= r1 < r2 <= n-2")
    p.set_defaults(func=_cmd_check_relative)

    p = sub.add_parser("lambda-seq", help="print the coverage-count histogram as count*value tokens")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_lambda_seq)

    threads_default = os.cpu_count() or 1
    p = sub.add_parser("scan-3", help="feasible strength-3 parameter rows as TSV")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--cases", default="1,2,3,4", help="comma list from {1,2,3,4}")
    p.add_argument("--annotate", action="store_true", help="attach nonexistence verdicts")
    p.add_argument("--threads", type=int, default=threads_default)
    _add_out(p)
    p.set_defaults(func=_cmd_scan3)

    p = sub.add_parser("scan-4", help="feasible strength-4 parameter rows as TSV")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--annotate", action="store_true", help="attach nonexistence verdicts")
    p.add_argument("--threads", type=int, default=threads_default)
    _add_out(p)
    p.set_defaults(func=_cmd_scan4)

    p = sub.add_parser("nonexist", help="apply the nonexistence test matching v,k,lam")
    p.add_argument("--params", required=True, metavar="v,k,lam")
    p.add_argument("--t", type=int, default=2, choices=(2, 3),
                   help="2: symmetric-design tests; 3: triple-system congruence test")
    p.set_defaults(func=_cmd_nonexist)

    p = sub.add_parser("construct", help="generate a design file")
    csub = p.add_subparsers(dest="what", required=True)
    c = csub.add_parser("fano", help="the 2-(7,3,1) design")
    _add_out(c)
    c = csub.add_parser("paley", help="quadratic-residue translates, prime q = 3 mod 4")
    c.add_argument("q", type=int)
    _add_out(c)
    c = csub.add_parser("witt23", help="the 4-(23,7,1) design")
    _add_out(c)
    _add_transform_subcommands(csub)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("transform", help="derive a design from an existing file")
    tsub = p.add_subparsers(dest="what", required=True)
    _add_transform_subcommands(tsub)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("conjecture2", help="pairs in a corpus directory with equal coverage histograms")
    p.add_argument("dir")
    p.add_argument("--t", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_conjecture2)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())

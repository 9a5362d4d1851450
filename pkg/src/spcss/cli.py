"""Command-line front end: ``spcss <verb> [flags]``.

Exit status: 0 success, 1 rejected input or usage error, 2 property-suite failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import harness, suites
from .css import DecodingFailure, PauliError, Policy, Syndromes, build
from .cyclic import enumerate_cyclic_codes, format_code_spec, is_dual_containing, min_distances, parse_code_spec
from .metrics import PairWord
from .sp_syndrome import classical_pair_decode

DEFAULT_CODE = harness.EXAMPLE_CODE_SPEC


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spcss", description="Symbol-pair decoding of CSS codes from cyclic codes.")
    sub = p.add_subparsers(dest="verb", metavar="{analyze,decode,enumerate,compare,verify,simulate}")
    sub.required = True

    def code_flag(sp):
        sp.add_argument("--code", default=DEFAULT_CODE, help=f'code spec "n=<int> g=<bits>" (default "{DEFAULT_CODE}")')

    a = sub.add_parser("analyze", help="distances, dual containment and quantum parameters")
    code_flag(a)

    d = sub.add_parser("decode", help="decode an injected error, raw syndromes, or a received pair word")
    code_flag(d)
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--error", help='injected error "a=<bits> b=<bits>"')
    src.add_argument("--syndromes", help='measured syndromes "sa=<bits> sb=<bits>"')
    src.add_argument("--pairs", help='received pair word "(1,1),(1,0),..." (with --classical)')
    d.add_argument("--decoder", choices=("improved", "standard", "combined"), default="improved")
    d.add_argument("--policy", choices=[p.value for p in Policy], default=Policy.IMPROVED_FIRST.value)
    d.add_argument("--classical", action="store_true", help="classical symbol-pair decoding of --pairs")

    e = sub.add_parser("enumerate", help="list cyclic codes of odd length n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--dual-containing", action="store_true")

    c = sub.add_parser("compare", help="exhaustive decoder comparison report")
    code_flag(c)
    c.add_argument("--out", help="CSV output path")

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=("all",) + suites.SUITES, default="all")
    v.add_argument("--n-max", type=int, default=suites.DEFAULT_N_MAX)

    s = sub.add_parser("simulate", help="Monte-Carlo depolarizing noise")
    code_flag(s)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--trials", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", help="CSV output path")
    return p


def _analyze(args) -> int:
    C = parse_code_spec(args.code)
    print(f"code: {format_code_spec(C)}  g(x) = {C.g}")
    dist = min_distances(C)
    dc = is_dual_containing(C)
    if dist is None:
        print(f"n={C.n} k=0 d_H=undefined d_sp=undefined dual_containing={str(dc).lower()}")
        return 0
    print(f"n={C.n} k={C.k} d_H={dist.d_h} d_sp={dist.d_sp} dual_containing={str(dc).lower()}")
    if dc:
        t_h, t_p = (dist.d_h - 1) // 2, (dist.d_sp - 1) // 2
        print(f"quantum: [[{C.n},{2 * C.k - C.n},>={dist.d_h}]] t_H={t_h} t_p={t_p}")
    else:
        print("quantum: n/a (not dual-containing)")
    return 0


def _decode(args) -> int:
    C = parse_code_spec(args.code)
    css = build(C)
    if args.classical or args.pairs is not None:
        if args.pairs is None:
            raise ValueError("--classical needs --pairs")
        y = PairWord.parse(args.pairs)
        c = classical_pair_decode(y, css.sp_table)
        print(f"received: {y}")
        print(f"decoded codeword: {c}" if c is not None else "decoded codeword: none (beyond-radius)")
        return 0
    e = PauliError.parse(args.error) if args.error else None
    s = css.measure(e) if e is not None else Syndromes.parse(args.syndromes)
    print(f"syndromes: {s}")
    try:
        e_hat, tag = css.decode(s, args.decoder, args.policy)
    except DecodingFailure as err:
        print(f"result: failure (stage {err.stage})")
        return 0
    label = tag if args.decoder != "combined" else f"combined[{args.policy}] via {tag}"
    print(f"recovered ({label}): {e_hat}")
    if e is not None:
        print(f"residual={harness.residual_class(css, e, e_hat).value}")
    return 0


def _enumerate(args) -> int:
    for C in enumerate_cyclic_codes(args.n):
        if args.dual_containing and not C.dual_containing:
            continue
        print(format_code_spec(C))
    return 0


def _compare(args) -> int:
    css = build(parse_code_spec(args.code))
    rows = harness.correctable_report(css)
    for row in rows:
        print(row.summary())
    if args.out:
        harness.write_csv(rows, args.out)
        print(f"wrote {args.out}")
    return 0


def _verify(args) -> int:
    status = 0
    for name in ((args.suite,) if args.suite != "all" else suites.SUITES):
        t0 = time.perf_counter()
        for res in suites.run(name, args.n_max):
            print(f"{res.line()} [{time.perf_counter() - t0:.2f}s]")
            if not res.passed:
                status = 2
    return status


def _simulate(args) -> int:
    css = build(parse_code_spec(args.code))
    rows = harness.monte_carlo(css, args.p, args.trials, args.seed, workers=args.workers)
    print(f"p={args.p} trials={args.trials} seed={args.seed}")
    for row in rows:
        print(f"{row.summary()} logical_rate={row.rate(row.miscorrections):.6f}")
    if args.out:
        harness.write_csv(rows, args.out)
        print(f"wrote {args.out}")
    return 0


_VERBS = {
    "analyze": _analyze,
    "decode": _decode,
    "enumerate": _enumerate,
    "compare": _compare,
    "verify": _verify,
    "simulate": _simulate,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except UsageError as err:
        print(err, file=sys.stderr)
        return 1
    except SystemExit as exit_:  # --help
        return int(exit_.code or 0)
    try:
        return _VERBS[args.verb](args)
    except (ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

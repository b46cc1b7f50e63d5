"""Command line interface: ``verify``, ``gen``, ``bench`` and ``minb``.

Exit codes: 0 success (SSC / solution found), 1 negative answer, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _backend
from .bench import bench_cells, grid_n, grid_nu, write_csv
from .errors import BudgetExceeded, GenerationFailed, NoSolutionWithin, SscError
from .generate import GenSpec, gen
from .min_input import DEFAULT_BUDGET, MinBQuery, min_columns
from .mmio import format_pattern, parse_pattern, write_pattern
from .verifier import is_ssc

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2

_REQUIRE = {"none": "none", "ssc0": "ssc_lambda0", "ssc": "ssc_full"}


def _int_list(text: str) -> list[int]:
    """``"1,2,3"`` or a range ``"start:stop:step"`` (stop inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            bits = [int(b) for b in part.split(":")]
            start, stop = bits[0], bits[1]
            step = bits[2] if len(bits) > 2 else 1
            out.extend(range(start, stop + 1, step))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def cmd_verify(args) -> int:
    try:
        x, n, r = parse_pattern(args.a, args.b, args.state_dim)
    except (OSError, SscError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep = is_ssc(x, n)
    if args.json:
        doc = rep.to_dict()
        doc.update(n=n, r=r, nu=x.nu, backend=_backend.BACKEND)
        print(json.dumps(doc))
    else:
        print(f"n={n} r={r} nu={x.nu}")
        print(f"ssc: {'yes' if rep.ssc else 'no'}")
        print(f"  lambda = 0:  {'yes' if rep.ssc_lambda0 else 'no'}  witness={rep.witness0} ops={rep.ops0}")
        print(f"  lambda != 0: {'yes' if rep.ssc_nonzero else 'no'}  witness={rep.witness1} ops={rep.ops1}")
    return EXIT_OK if rep.ssc else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(
            args.n, args.r, args.nu, seed=args.seed, require=_REQUIRE[args.require],
            max_attempts=args.max_attempts, method=args.method,
        )
        g = gen(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    comments = (
        f"state-dim {g.n}",
        f"n={g.n} r={g.r} nu={g.nu} seed={g.seed} require={args.require} "
        f"method={g.method} attempts={g.attempts}",
    )
    if args.output in (None, "-"):
        sys.stdout.write(format_pattern(g.pattern, comments))
    else:
        write_pattern(args.output, g.pattern, comments)
    print(f"attempts={g.attempts} method={g.method}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.nu_list is not None:
        if args.n is None:
            print("error: --nu-list needs --n", file=sys.stderr)
            return EXIT_INPUT
        cells = grid_nu(args.n, args.r, args.nu_list)
    elif args.n_list is not None:
        if args.nu is None:
            print("error: --n-list needs --nu", file=sys.stderr)
            return EXIT_INPUT
        cells = grid_n(args.n_list, args.r, args.nu)
    elif args.n is not None and args.nu is not None:
        cells = [(args.n, args.r, args.nu)]
    else:
        print("error: give --n with --nu-list, --n-list with --nu, or --n with --nu", file=sys.stderr)
        return EXIT_INPUT
    try:
        records = list(bench_cells(cells, args.seeds, args.repeats, args.backend))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    write_csv(records)
    return EXIT_OK


def cmd_minb(args) -> int:
    try:
        a, n, _ = parse_pattern(args.a)
        q = MinBQuery(
            a, max_r=args.max_r, max_stars_per_column=args.max_stars_per_column,
            parallelism=args.workers, budget=args.budget,
        )
    except (OSError, SscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        res = min_columns(q)
    except NoSolutionWithin as exc:
        print(f"no solution: {exc} ({exc.candidates_tested} candidates tested)")
        return EXIT_NEGATIVE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}")
        return EXIT_NEGATIVE
    print(f"r_min={res.r_min}")
    print(f"candidates_tested={res.candidates_tested}")
    print(f"elapsed_ms={res.elapsed * 1e3:.3f}")
    sys.stdout.write(format_pattern(res.b, (f"input pattern B, {n}x{res.r_min}",)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sscverify", description="Strong structural controllability of structural pairs (A, B)."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="test a pattern pair")
    p.add_argument("a", help="A (n x n) or combined (n x (n+r)) Matrix Market file")
    p.add_argument("b", nargs="?", help="B (n x r) Matrix Market file")
    p.add_argument("--state-dim", type=int, help="n, for a combined file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random pattern")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require", choices=sorted(_REQUIRE), default="none")
    p.add_argument("--method", choices=("auto", "reject", "planted"), default="auto")
    p.add_argument("--max-attempts", type=int, default=100)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time both modes over a grid, CSV to stdout")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nu", type=int)
    p.add_argument("--nu-list", type=_int_list)
    p.add_argument("--n-list", type=_int_list)
    p.add_argument("--seeds", type=_int_list, default=[0])
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--backend", choices=("cython", "python"))
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("minb", help="search an input pattern B with the fewest columns")
    p.add_argument("a", help="A (n x n) Matrix Market file")
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--max-stars-per-column", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_minb)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

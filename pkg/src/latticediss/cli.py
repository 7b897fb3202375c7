"""Command-line interface.

Exit codes: 0 success/contractible, 10 impossible (no dissection or no
realization, or word not contractible), 11 verification failed, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combi, gen, svg
from .bench import format_table, run_bench
from .dissect import (
    Dissection,
    diagonal_dissection,
    dissection_to_json,
    parse_dissection_json,
    unit_dissection,
)
from .errors import LatticeDissError, PreconditionViolated
from .geometry import boundary_word, parse_polygon_json, polygon_to_json, signed_area2
from .verify import verify_dissection, witness_noninteger
from .words import CyclicWord, available_kernels, decide_contractible

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IMPOSSIBLE = 10
EXIT_INVALID = 11


class _CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _CliError(f"cannot read {path}: {e}") from e


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _parse_word(s: str) -> CyclicWord:
    if not s or not all("A" <= ch <= "Z" for ch in s):
        raise _CliError(f"words must be nonempty strings over A-Z, got {s!r}")
    return CyclicWord(s)


def _load_polygon(path: str):
    return parse_polygon_json(_read(path))


def _load_dissection(path: str) -> Dissection:
    _, D = parse_dissection_json(_read(path))
    return D


def cmd_decide(args) -> int:
    if args.polygon:
        P = _load_polygon(args.polygon)
        w = boundary_word(P)
        print(f"word {w}")
    else:
        w = _parse_word(args.word)
    ok, _ = decide_contractible(w)
    print("contractible" if ok else "not-contractible")
    return EXIT_OK if ok else EXIT_IMPOSSIBLE


def cmd_dissect(args) -> int:
    P = _load_polygon(args.polygon)
    D = unit_dissection(P) if args.unit else diagonal_dissection(P)
    if D is None:
        w = boundary_word(P)
        print(f"no integral dissection exists (word {w} not contractible)", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    _write(args.output, dissection_to_json(P, D))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _load_polygon(args.polygon)
    D = _load_dissection(args.dissection)
    report = verify_dissection(P, D, args.mode, diagnostics=args.diagnostics)
    print(report.to_json())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_witness(args) -> int:
    P = _load_polygon(args.polygon)
    D = _load_dissection(args.dissection)
    try:
        t = witness_noninteger(P, D)
    except PreconditionViolated as e:
        raise _CliError(str(e)) from e
    a2 = signed_area2(t)
    print(json.dumps({
        "triangle": [[v.x, v.y] for v in t],
        "doubled_area": a2,
        "area": str(Fraction(a2, 2)),
    }))
    return EXIT_OK


def cmd_sperner(args) -> int:
    w = _parse_word(args.word)
    try:
        rep = combi.sperner_check(w)
    except LatticeDissError as e:
        raise _CliError(str(e)) from e
    print(json.dumps({
        "word": str(w),
        "contractible": rep.contractible,
        "triangulations_examined": rep.triangulations_examined,
        "tricolor_free": rep.tricolor_free_count,
        "biconditional": "ok",
        "star_tricolor": rep.star_tricolor,
    }))
    return EXIT_OK


def cmd_render(args) -> int:
    P = _load_polygon(args.polygon)
    D = _load_dissection(args.dissection) if args.dissection else None
    _write(args.output, svg.render_svg(P, D))
    return EXIT_OK


def cmd_bench(args) -> int:
    lengths = [int(x) for x in args.lengths.split(",") if x.strip()] if args.lengths else []
    if not lengths:
        print(format_table([]))
        return EXIT_OK
    kernels = available_kernels() if args.impl == "both" else [args.impl]
    if any(k not in available_kernels() for k in kernels):
        raise _CliError(f"kernel {args.impl!r} unavailable; have {available_kernels()}")
    rows = run_bench(lengths, seed=args.seed, kernels=kernels)
    print(format_table(rows))
    return EXIT_OK


def cmd_realize(args) -> int:
    w = _parse_word(args.word)
    P = gen.realize_word(w, coord_bound=args.bound)
    if P is None:
        print(f"no convex lattice polygon realizing {w} found within bound", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    _write(args.output, polygon_to_json(P))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticediss",
        description="Dissect convex lattice polygons into lattice triangles of area 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a word (or a polygon's boundary word) is contractible")
    p.add_argument("word", nargs="?", help="cyclic word over A-Z, e.g. ABCDACBADC")
    p.add_argument("--polygon", help="polygon JSON file instead of a word (- for stdin)")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("dissect", help="construct an integral (or unit, with --unit) dissection")
    p.add_argument("polygon", help="polygon JSON file (- for stdin)")
    p.add_argument("--unit", action="store_true", help="refine to triangles of area exactly 1")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(fn=cmd_dissect)

    p = sub.add_parser("verify", help="verify a dissection file against a polygon file")
    p.add_argument("polygon")
    p.add_argument("dissection")
    p.add_argument("--mode", choices=("integral", "unit", "any"), default="any")
    p.add_argument("--diagnostics", action="store_true",
                   help="scan for properly crossing edges when verification fails")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("witness", help="exhibit a non-integer-area triangle in a dissection")
    p.add_argument("polygon")
    p.add_argument("dissection")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("sperner", help="exhaustive tricolor check over all diagonal triangulations")
    p.add_argument("word")
    p.set_defaults(fn=cmd_sperner)

    p = sub.add_parser("render", help="render a polygon (and optional dissection) as SVG")
    p.add_argument("polygon")
    p.add_argument("dissection", nargs="?")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("bench", help="time the decider on random words and fit linearity")
    p.add_argument("--lengths", default="10000,100000,1000000",
                   help="comma-separated word lengths")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--impl", choices=("both", "fast", "pure"), default="both",
                   help="which kernel(s) to time")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("realize", help="find a convex lattice polygon with a given boundary word")
    p.add_argument("word")
    p.add_argument("--bound", type=int, default=None,
                   help="coordinate bound (default: LATTICEDISS_BOUND or 50)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(fn=cmd_realize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "decide" and bool(args.word) == bool(args.polygon):
        parser.error("decide needs exactly one of WORD or --polygon FILE")
    try:
        return args.fn(args)
    except (_CliError, LatticeDissError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: complexity, annihilate, verify, search, decompose, lines,
nivat-scan, bounds, tile-verify, tile-search, examples.  All reports are
plain text (key=value lines) or CSV; identical inputs give byte-identical
output.  Exit codes: 0 success, 1 failed check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .annihilator import find_annihilator, search_difference_annihilator
from .configurations import Configuration, pattern_complexity
from .decomposition import decompose
from .errors import InfeasibleError, VerificationFailedError
from .lattice import Lattice, Window
from .laurent import LaurentPolynomial, annihilates, line_factorization
from .nivat import bound_two_directions, corollary_report, nivat_scan, scan_csv
from .textio import (
    format_poly,
    parse_config,
    parse_poly,
    parse_tile,
    parse_vectors,
    parse_window,
)
from .tiling import (
    ClusterTile,
    PeriodicCoTiler,
    prime_periodicity_check,
    search_periodic_cotiler,
    verify_cotiler,
)

__all__ = ["ConfigFile", "read_config_file", "parse_config", "run", "main"]


@dataclass
class ConfigFile:
    """A parsed configuration plus file-level metadata."""

    name: str
    dim: int
    config: Configuration


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def read_config_file(path: str) -> ConfigFile:
    with open(path, encoding="utf-8") as fh:
        text = _strip_comments(fh.read())
    c = parse_config(text)
    name = os.path.splitext(os.path.basename(path))[0]
    return ConfigFile(name=name, dim=c.dim, config=c)


def _text_or_file(arg: str) -> str:
    """Flag values may be inline text or a path to a file holding it."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return _strip_comments(fh.read())
    return arg


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _fmt_vecs(vs) -> str:
    return ";".join(_fmt_vec(v) for v in vs)


def _bool(b) -> str:
    return "true" if b else "false"


def _parse_range(text: str):
    a, sep, b = text.partition("..")
    if not sep:
        v = int(a)
        return range(v, v + 1)
    return range(int(a), int(b) + 1)


def _threads_from_env() -> int:
    raw = os.environ.get("NIVATK_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise ValueError(f"NIVATK_THREADS must be a positive integer, got {raw!r}")
    return n


def _load_config(args) -> Configuration:
    if os.path.isfile(args.config):
        return read_config_file(args.config).config
    return parse_config(_strip_comments(args.config))


def _cmd_complexity(args) -> int:
    c = _load_config(args)
    shape = parse_window(args.shape, c.dim)
    sample = parse_window(args.sample, c.dim) if args.sample else None
    res = pattern_complexity(c, shape, sample)
    print(f"count={res.count} exact={_bool(res.exact)}")
    return 0


def _cmd_annihilate(args) -> int:
    c = _load_config(args)
    shape = parse_window(args.shape, c.dim)
    sample = parse_window(args.sample, c.dim)
    verify = parse_window(args.verify, c.dim) if args.verify else sample
    report = find_annihilator(c, shape, sample, verify)
    if report is None:
        print("found=false")
        return 0
    print("found=true")
    print(f"g={format_poly(report.g)}")
    print(f"constant={report.constant}")
    print(f"f={format_poly(report.f)}")
    return 0


def _cmd_verify(args) -> int:
    c = _load_config(args)
    f = parse_poly(_text_or_file(args.poly), dim=c.dim)
    window = parse_window(args.window, c.dim)
    res = annihilates(f, c, window)
    if res:
        print(f"annihilates=true status={res.status}")
        return 0
    print(f"annihilates=false witness={_fmt_vec(res.witness)}")
    return 1


def _cmd_search(args) -> int:
    c = _load_config(args)
    window = parse_window(args.window, c.dim)
    steps = search_difference_annihilator(c, args.max_factors, args.coord_bound, window)
    if steps is None:
        print("found=false")
        return 0
    product = LaurentPolynomial.one(c.dim)
    for v in steps:
        product = product * LaurentPolynomial.difference(v)
    print("found=true")
    print(f"steps={_fmt_vecs(steps)}")
    print(f"product={format_poly(product)}")
    return 0


def _cmd_decompose(args) -> int:
    c = _load_config(args)
    vectors = parse_vectors(args.vectors)
    core = parse_window(args.core, c.dim)
    halo = parse_window(args.halo, c.dim) if args.halo else None
    try:
        dec = decompose(c, vectors, core, halo)
    except InfeasibleError as exc:
        print("feasible=false")
        print(f"reason={exc}")
        return 1
    print("feasible=true")
    print(f"components={len(dec.components)}")
    print(f"vectors={_fmt_vecs(dec.vectors)}")
    print(f"residual_check={_bool(dec.residual_check)}")
    print(f"integral={_bool(dec.integral)}")
    for i, comp in enumerate(dec.components):
        nonzero = sum(1 for v in comp.values.values() if v != 0)
        print(f"component {i}: step={_fmt_vec(dec.vectors[i])} nonzero={nonzero}")
    return 0


def _cmd_lines(args) -> int:
    f = parse_poly(_text_or_file(args.poly))
    lf = line_factorization(f)
    print(f"monomial={_fmt_vec(lf.monomial)}")
    for i, (v, phi) in enumerate(lf.factors):
        print(f"factor {i}: direction={_fmt_vec(v)} poly={format_poly(phi)}")
    print(f"remainder={format_poly(lf.remainder)}")
    print(f"directions={_fmt_vecs(lf.directions)}")
    return 0


def _cmd_nivat_scan(args) -> int:
    c = _load_config(args)
    sample = parse_window(args.sample, c.dim)
    rows = nivat_scan(c, _parse_range(args.M), _parse_range(args.N), sample,
                      threads=_threads_from_env())
    out = scan_csv(rows)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def _cmd_bounds(args) -> int:
    if args.poly:
        f = parse_poly(_text_or_file(args.poly))
        lf = line_factorization(f)
        rep = corollary_report(f, lf, args.M, args.N)
        print(f"bbox={_fmt_vec(rep.bbox_f)}")
        for name, value in rep.bounds:
            tag = " conditional" if name in rep.conditional else ""
            print(f"{name}={value}{tag}")
        for pair, value in rep.pair_bounds:
            print(f"pair {_fmt_vecs(pair)}: {value}")
        if rep.best is not None:
            print(f"best={rep.best[0]} value={rep.best[1]}")
        if rep.alpha is not None:
            print(f"alpha={rep.alpha}")
        return 0
    if args.v1 and args.v2:
        v1 = parse_vectors(args.v1)[0]
        v2 = parse_vectors(args.v2)[0]
        value = bound_two_directions(v1, v2, args.M, args.N)
        print(f"bound={value}")
        return 0
    print("error: bounds needs either --poly or both --v1 and --v2", file=sys.stderr)
    return 2


def _cmd_tile_verify(args) -> int:
    tile = parse_tile(_text_or_file(args.tile))
    lattice = Lattice(parse_vectors(args.lattice))
    residues = parse_vectors(args.residues) if args.residues else [(0,) * tile.dim]
    cotiler = PeriodicCoTiler(lattice, residues)
    res = verify_cotiler(tile, cotiler)
    if res:
        print("status=Valid")
        return 0
    print(f"status={res.status} witness={_fmt_vec(res.witness)}")
    return 1


def _cmd_tile_search(args) -> int:
    tile = parse_tile(_text_or_file(args.tile))
    cotiler = search_periodic_cotiler(tile, args.max_index)
    if cotiler is None:
        print("found=false")
        return 0
    print("found=true")
    print(f"index={cotiler.lattice.index()}")
    print(f"lattice={_fmt_vecs(cotiler.lattice.basis())}")
    print(f"residues={_fmt_vecs(cotiler.residues)}")
    return 0


# Reference inputs for the end-to-end example suite.

TWO_LINES_3D = ("sum { +coset offset(0,0,0) gens{(1,0,0)} value 1 "
                "+coset offset(0,0,3) gens{(0,1,0)} value 1 }")
BINARY_IRRATIONAL_2D = ("sum { +mechanical weights(1,1) alpha sqrt(2) "
                        "-mechanical weights(1,0) alpha sqrt(2) "
                        "-mechanical weights(0,1) alpha sqrt(2) }")


def _example_1() -> str:
    c = parse_config(TWO_LINES_3D)
    shape = Window.box((0, 0, 0), (2, 2, 2))
    sample = Window.box((-12, -12, -12), (9, 9, 9))
    res = pattern_complexity(c, shape, sample)
    ok = res.count == 19
    return f"{'PASS' if ok else 'FAIL'} complexity(3x3x3)={res.count} expected=19"


def _example_2() -> str:
    tile = ClusterTile([(0, 0), (0, 1), (1, 0)])
    cotiler = search_periodic_cotiler(tile, 3)
    if cotiler is None:
        return "FAIL no periodic co-tiler of index <= 3"
    res = verify_cotiler(tile, cotiler)
    periods = prime_periodicity_check(tile, cotiler)
    ok = bool(res) and len(periods) == 3
    return (f"{'PASS' if ok else 'FAIL'} tiling={res.status} "
            f"periods={len(periods)}/3 congruence=ok")


def _example_3() -> str:
    c = parse_config(TWO_LINES_3D)
    core = Window.box((-4, -4, -4), (4, 4, 4))
    try:
        dec = decompose(c, [(1, 0, 0), (0, 1, 0)], core)
    except InfeasibleError:
        return "FAIL decomposition infeasible"
    ok = len(dec.components) == 2 and dec.residual_check and dec.integral
    return (f"{'PASS' if ok else 'FAIL'} components={len(dec.components)} "
            f"sum_matches={_bool(dec.residual_check)} integral={_bool(dec.integral)}")


def _example_4() -> str:
    c = parse_config(TWO_LINES_3D)
    window = Window.box((-6, -6, -6), (6, 6, 6))
    steps = search_difference_annihilator(c, 2, 1, window)
    ok = steps is not None and sorted(steps) == [(0, 1, 0), (1, 0, 0)]
    found = _fmt_vecs(steps) if steps else "none"
    return f"{'PASS' if ok else 'FAIL'} steps={found} expected=(0,1,0);(1,0,0)"


def _example_5() -> str:
    c = parse_config(BINARY_IRRATIONAL_2D)
    f = (LaurentPolynomial.difference((1, 0))
         * LaurentPolynomial.difference((0, 1))
         * LaurentPolynomial.difference((1, -1)))
    window = Window.box((0, 0), (199, 199))
    res = annihilates(f, c, window)
    values = {c.value(u) for u in window}
    ok = bool(res) and values <= {0, 1}
    vals = ",".join(str(v) for v in sorted(values))
    return (f"{'PASS' if ok else 'FAIL'} annihilates=200x200 "
            f"values={{{vals}}}")


def _cmd_examples(args) -> int:
    runners = [_example_1, _example_2, _example_3, _example_4, _example_5]
    failed = False
    for k, runner in enumerate(runners, start=1):
        line = runner()
        failed = failed or line.startswith("FAIL")
        print(f"Example {k}: {line}")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nivatk",
        description="Exact tools for low-pattern-complexity configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complexity", help="count distinct patterns of a shape")
    p.add_argument("--config", required=True, help="configuration file")
    p.add_argument("--shape", required=True, help="window spec, e.g. 2x2 or 0..1,0..1")
    p.add_argument("--sample", help="anchor window (optional for periodic configs)")
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("annihilate", help="find a nonzero annihilating polynomial")
    p.add_argument("--config", required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--sample", required=True)
    p.add_argument("--verify", help="verification window (default: sample)")
    p.set_defaults(func=_cmd_annihilate)

    p = sub.add_parser("verify", help="check that a polynomial annihilates a configuration")
    p.add_argument("--config", required=True)
    p.add_argument("--poly", required=True, help="polynomial text or file")
    p.add_argument("--window", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search for a difference-product annihilator")
    p.add_argument("--config", required=True)
    p.add_argument("--max-factors", type=int, default=3)
    p.add_argument("--coord-bound", type=int, default=1)
    p.add_argument("--window", required=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("decompose", help="split a window into periodic components")
    p.add_argument("--config", required=True)
    p.add_argument("--vectors", required=True, help="period steps, e.g. \"(1,0);(0,1)\"")
    p.add_argument("--core", required=True)
    p.add_argument("--halo", help="verification window (default: derived)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("lines", help="factor out line polynomials")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_lines)

    p = sub.add_parser("nivat-scan", help="scan sampled complexity against M*N")
    p.add_argument("--config", required=True)
    p.add_argument("--M", required=True, help="range, e.g. 2..8")
    p.add_argument("--N", required=True, help="range, e.g. 2..8")
    p.add_argument("--sample", required=True, help="anchor window, e.g. 500")
    p.set_defaults(func=_cmd_nivat_scan)

    p = sub.add_parser("bounds", help="complexity lower bounds from line structure")
    p.add_argument("--poly", help="annihilator to analyse")
    p.add_argument("--v1", help="first direction (with --v2)")
    p.add_argument("--v2", help="second direction")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("tile-verify", help="check a periodic co-tiler")
    p.add_argument("--tile", required=True, help="tile text or file")
    p.add_argument("--lattice", required=True, help="generators, e.g. \"(3,0);(1,1)\"")
    p.add_argument("--residues", help="coset representatives (default: origin)")
    p.set_defaults(func=_cmd_tile_verify)

    p = sub.add_parser("tile-search", help="search for a periodic co-tiler")
    p.add_argument("--tile", required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.set_defaults(func=_cmd_tile_search)

    p = sub.add_parser("examples", help="run the built-in example suite")
    p.set_defaults(func=_cmd_examples)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except VerificationFailedError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

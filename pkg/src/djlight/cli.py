"""Command-line front end.

Subcommands: ``classify`` (run one function and report the verdict),
``compile`` (function file to gate-program file), ``verify`` (cross-check
all layers), ``sweep`` (bias-vs-intensity table), ``geometry`` (per-round
lattice report).  Exit status: 0 for Constant/Balanced (and passing
verifies), 2 for a Biased verdict, 1 for any error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from itertools import combinations

import numpy as np

from .crosscheck import cross_check
from .errors import ContractError, ParseError, ResourceError
from .fileio import read_function_file, read_program_file, write_program_file
from .optics import (
    OpticsParams,
    dove_rotation_angle,
    initial_lattice,
    resolvable_rounds,
    round_trip_lattice,
    run_optical,
)
from .oracles import TruthTable, compile_affine, compile_general
from .report import fmt, run_abstract
from .tree import run_program

VERIFY_LIMIT = 12
SWEEP_LIMIT = 12


def _add_optics_flags(parser):
    group = parser.add_argument_group("optics parameters")
    group.add_argument("--spacing", type=float, default=1.0,
                       help="initial spot spacing (default 1.0)")
    group.add_argument("--spot-size", type=float, default=0.25,
                       help="Gaussian 1/e spot radius (default 0.25)")
    group.add_argument("--grid", type=int, default=512,
                       help="grid samples per axis, power of two (default 512)")
    group.add_argument("--window", type=float, default=None,
                       help="sampled plane width (default: auto)")
    group.add_argument("--loss", type=float, default=1.0,
                       help="per-round amplitude transmission (default 1.0)")
    return group


def _optics_params(args) -> OpticsParams:
    return OpticsParams(
        spacing=args.spacing,
        spot_size=args.spot_size,
        grid_size=args.grid,
        window=args.window,
        loss=args.loss,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="djlight",
        description="Classical-light cavity simulation of the "
                    "Deutsch-Jozsa algorithm.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="run one function and classify it")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--function", help="function file")
    source.add_argument("--program", help="gate-program file")
    p.add_argument("--mode", choices=("abstract", "optical"),
                   default="abstract")
    p.add_argument("--epsilon", type=float, default=1e-6,
                   help="intensity-ratio threshold (default 1e-6)")
    _add_optics_flags(p)

    p = sub.add_parser("compile", help="compile a function file to a program")
    p.add_argument("--function", required=True)
    p.add_argument("--out", required=True, help="program file to write")

    p = sub.add_parser("verify", help="cross-check all layers on one function")
    p.add_argument("--function", required=True)
    p.add_argument("--n-limit", type=int, default=VERIFY_LIMIT,
                   help=f"largest accepted register (default {VERIFY_LIMIT})")
    p.add_argument("--optical", action="store_true",
                   help="include the optical layer")
    _add_optics_flags(p)

    p = sub.add_parser("sweep", help="bias level vs measured intensity ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("abstract", "optical"),
                   default="abstract")
    p.add_argument("--out", required=True, help="CSV file to write")
    p.add_argument("--samples", type=int, default=16,
                   help="tables per bias level (default 16)")
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed for sampled tables (default 0)")
    _add_optics_flags(p)

    p = sub.add_parser("geometry", help="per-round lattice report")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV file to write")
    _add_optics_flags(p)

    return parser


def _load_table(args) -> TruthTable:
    if args.function:
        return read_function_file(args.function).table
    program = read_program_file(args.program)
    state = run_program(program)
    signs = state.amplitudes.real < 0
    bits = signs.astype(np.uint8) ^ program.global_phase
    return TruthTable(program.n, bits)


def _cmd_classify(args) -> int:
    table = _load_table(args)
    if args.mode == "optical":
        report = run_optical(table, _optics_params(args), epsilon=args.epsilon)
    else:
        report = run_abstract(table, epsilon=args.epsilon)
    print("\n".join(report.lines()))
    return 2 if report.verdict == "Biased" else 0


def _cmd_compile(args) -> int:
    source = read_function_file(args.function)
    if source.affine is not None:
        program = compile_affine(source.affine, source.n)
    else:
        program = compile_general(source.table)
    write_program_file(program, args.out)
    return 0


def _cmd_verify(args) -> int:
    source = read_function_file(args.function)
    if source.n > args.n_limit:
        raise ResourceError(
            f"n={source.n} exceeds the verify limit {args.n_limit}"
        )
    params = _optics_params(args) if args.optical else None
    result = cross_check(source.table, params)
    print("\n".join(result.lines()))
    return 0 if result.passed else 1


def _sweep_tables(n, ones, samples, rng):
    size = 1 << n
    if math.comb(size, ones) <= samples:
        for positions in combinations(range(size), ones):
            bits = np.zeros(size, dtype=np.uint8)
            bits[list(positions)] = 1
            yield TruthTable(n, bits)
        return
    for _ in range(samples):
        bits = np.zeros(size, dtype=np.uint8)
        bits[rng.choice(size, size=ones, replace=False)] = 1
        yield TruthTable(n, bits)


def _cmd_sweep(args) -> int:
    if args.n < 1 or args.n > SWEEP_LIMIT:
        raise ResourceError(f"sweep supports 1 <= n <= {SWEEP_LIMIT}")
    params = _optics_params(args) if args.mode == "optical" else None
    rng = np.random.default_rng(args.seed)
    size = 1 << args.n
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n1", "predicted", "measured", "abs_err"])
        for ones in range(size + 1):
            predicted = ((size - 2 * ones) / size) ** 2
            ratios = []
            for table in _sweep_tables(args.n, ones, args.samples, rng):
                if params is None:
                    ratios.append(run_abstract(table).intensity_ratio)
                else:
                    ratios.append(run_optical(table, params).intensity_ratio)
            measured = float(np.mean(ratios))
            writer.writerow([ones, fmt(predicted), fmt(measured),
                             fmt(abs(measured - predicted))])
    return 0


def _cmd_geometry(args) -> int:
    if args.rounds < 1:
        raise ContractError("rounds must be >= 1")
    params = _optics_params(args)
    limit = resolvable_rounds(params.spacing, params.spot_size)
    lattice = initial_lattice(params)
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["round", "count", "spacing", "extent",
                         "rotation", "prism", "resolvable"])
        for k in range(1, args.rounds + 1):
            lattice = round_trip_lattice(lattice, params)
            dove = dove_rotation_angle(k)
            writer.writerow([
                k, lattice.count, fmt(lattice.spacing), fmt(lattice.extent),
                fmt(dove.rotation), fmt(dove.prism_setting),
                fmt(k <= limit),
            ])
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "compile": _cmd_compile,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "geometry": _cmd_geometry,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ContractError, ResourceError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

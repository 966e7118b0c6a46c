"""Command-line front end.

Subcommands: ``triangle``, ``spin``, ``tetrahedron``, ``check``, and
``scenario <file>`` (which consumes the JSON formats from ``jsonio``).
Exit codes: 0 all checks pass, 1 any check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from .reports import ScenarioReport
from .scenarios import SpinConfig, run_check, run_scenario, run_spin, \
    run_tetrahedron, run_triangle


def _vector(text: str) -> np.ndarray:
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated vector: {text!r}")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three components x,y,z")
    v = np.asarray(parts)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise argparse.ArgumentTypeError("zero vector has no direction")
    return v / norm


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symquant",
        description="Finite-symmetry statistics and the qubit effect calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit the report as JSON instead of a table")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized checks")
        return p

    common(sub.add_parser("triangle", help="triangle-in-a-sphere scenario"))

    spin = common(sub.add_parser("spin", help="noisy spin measurement scenario"))
    spin.add_argument("--a", type=_vector, default="0,0,1",
                      help="initial direction x,y,z")
    spin.add_argument("--b", type=_vector, default="1,0,0",
                      help="question direction x,y,z")
    spin.add_argument("--alpha", type=float, default=0.0, help="test level")
    spin.add_argument("--beta", type=float, default=1.0, help="test power")
    spin.add_argument("--p1", type=float, default=None,
                      help="posterior error probability for the mixed state")

    tetra = common(sub.add_parser("tetrahedron",
                                  help="four-way comparison scenario"))
    tetra.add_argument("--alpha", type=float, default=0.0, help="test level")
    tetra.add_argument("--beta", type=float, default=1.0, help="test power")

    common(sub.add_parser("check", help="full invariant suite"))

    scen = common(sub.add_parser("scenario",
                                 help="check a JSON group/model/effect document"))
    scen.add_argument("file", help="path to the JSON document")
    scen.add_argument("--tol", type=float, default=1e-10,
                      help="tolerance for matrix checks")
    return parser


def _dispatch(args: argparse.Namespace) -> ScenarioReport:
    if args.command == "triangle":
        return run_triangle()
    if args.command == "spin":
        a = args.a if isinstance(args.a, np.ndarray) else _vector(args.a)
        b = args.b if isinstance(args.b, np.ndarray) else _vector(args.b)
        return run_spin(SpinConfig(a, b, args.alpha, args.beta, args.p1))
    if args.command == "tetrahedron":
        return run_tetrahedron(args.alpha, args.beta)
    if args.command == "check":
        return run_check(seed=args.seed)
    if args.command == "scenario":
        with open(args.file) as fh:
            data = json.load(fh)
        return run_scenario(data, tol=args.tol)
    raise AssertionError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _dispatch(args)
    except (ValueError, OSError, json.JSONDecodeError) as err:
        parser.exit(2, f"symquant: error: {err}\n")
    print(report.to_json() if args.json else report.to_table())
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())

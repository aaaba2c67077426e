"""Command-line front end.

Subcommands::

    vecquad solve      --algebra circular -p 0 -q 1
    vecquad verify     --algebra phs:lp:3 -p 1 -q 1
    vecquad properties --algebra hyperbolic --trials 1000 --seed 0
    vecquad curve      --algebra phs:lp:1 --radius 1 --samples 1024

``solve``, ``verify`` and ``properties`` print JSON; ``curve`` prints CSV.
Exit codes: 0 ok, 2 parse error, 3 unsupported regime, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .algebra import Algebra, QuadraticCoeffs, parse_algebra
from .errors import ParseError, UnsupportedRegime
from .functionals import EUCLIDEAN
from .oracle import GridSpec, check_laws, grid_search_full, match_roots
from .solvers import Root, RootReport, SolveOptions, solve

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_VERIFY = 4


# --- serialization ------------------------------------------------------------


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    if not math.isfinite(x):
        return "null"
    text = format(x, ".17g")
    return "0" if text == "-0" else text


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON with floats written by :func:`format_float`."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def root_to_dict(root: Root) -> dict:
    out = {"x": root.z.x, "y": root.z.y, "kind": root.kind, "residual": root.residual}
    if root.hyp_domain_ok is not None:
        out["hyp_domain_ok"] = root.hyp_domain_ok
    if root.locus_ok is not None:
        out["locus_ok"] = root.locus_ok
    return out


def report_to_dict(report: RootReport, command: str = "solve") -> dict:
    return {
        "format": FORMAT_VERSION,
        "command": command,
        "algebra": str(report.algebra),
        "p": report.coeffs.p,
        "q": report.coeffs.q,
        "discriminant": report.discriminant,
        "method": report.method,
        "no_solution_certified": report.no_solution_certified,
        "roots": [root_to_dict(r) for r in report.roots],
        "polar": [{"r": s.r, "phi": s.phi} for s in report.polar],
    }


# --- configuration ----------------------------------------------------------------


@dataclass
class CliConfig:
    subcommand: str
    algebra: str
    p: float = 0.0
    q: float = 0.0
    solve_options: SolveOptions = field(default_factory=SolveOptions)
    grid: dict = field(default_factory=dict)
    trials: int = 1000
    seed: int = 0
    radius: float = 1.0
    samples: int = 1024
    t_max: float = 3.0
    out: Optional[str] = None

    @property
    def alg(self) -> Algebra:
        return parse_algebra(self.algebra)

    @property
    def coeffs(self) -> QuadraticCoeffs:
        return QuadraticCoeffs(self.p, self.q)


def normalize_algebra(text: str) -> str:
    """Canonical spelling of an algebra spec, e.g. ``phs:lp:1.0`` -> ``phs:lp:1``."""
    return str(parse_algebra(text))


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vecquad",
        description="Vector zeros of z^2 + p z + q 1 over plane algebras.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", "-a", required=True,
                        help="circular | hyperbolic | phs:<euclidean|lp:e|wlp:e:wx:wy|max>")
    common.add_argument("--out", help="write output here instead of stdout")

    coeffs = argparse.ArgumentParser(add_help=False)
    coeffs.add_argument("-p", type=_finite, required=True)
    coeffs.add_argument("-q", type=_finite, required=True)
    coeffs.add_argument("--scan-intervals", type=_positive_int, default=4096)
    coeffs.add_argument("--phi-tol", type=_finite, default=1e-14)
    coeffs.add_argument("--residual-tol", type=_finite, default=1e-9)
    coeffs.add_argument("--exclusion-radius", type=_finite, default=1e-6)
    coeffs.add_argument("--real-only", action="store_true",
                        help="phs only: skip the accompanied search (allows q <= 0)")

    sub.add_parser("solve", parents=[common, coeffs], help="solve f(z) = o")

    verify = sub.add_parser("verify", parents=[common, coeffs],
                            help="compare solver roots with a brute-force grid search")
    verify.add_argument("--r-min", type=_finite)
    verify.add_argument("--r-max", type=_finite)
    verify.add_argument("--r-steps", type=_positive_int)
    verify.add_argument("--phi-steps", type=_positive_int)
    verify.add_argument("--refine-iters", type=int)

    props = sub.add_parser("properties", parents=[common], help="randomized algebraic-law checks")
    props.add_argument("--trials", type=_positive_int, default=1000)
    props.add_argument("--seed", type=int, default=0)

    curve = sub.add_parser("curve", parents=[common],
                           help="CSV samples of a generalized circle or hyperbolic half circle")
    curve.add_argument("--radius", type=_finite, default=1.0)
    curve.add_argument("--samples", type=_positive_int, default=1024)
    curve.add_argument("--t-max", type=_finite, default=3.0,
                       help="hyperbolic parameter range [-t_max, t_max]")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(subcommand=args.subcommand, algebra=normalize_algebra(args.algebra), out=args.out)
    if args.subcommand in ("solve", "verify"):
        cfg.p, cfg.q = args.p, args.q
        try:
            cfg.solve_options = SolveOptions(
                scan_intervals=args.scan_intervals,
                phi_tol=args.phi_tol,
                residual_tol=args.residual_tol,
                exclusion_radius=args.exclusion_radius,
                accompanied=not args.real_only,
            )
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if args.subcommand == "verify":
        cfg.grid = {
            "r_min": args.r_min,
            "r_max": args.r_max,
            "r_steps": args.r_steps,
            "phi_steps": args.phi_steps,
            "refine_iters": args.refine_iters,
        }
    if args.subcommand == "properties":
        cfg.trials, cfg.seed = args.trials, args.seed
    if args.subcommand == "curve":
        if args.radius <= 0.0:
            raise ParseError("--radius must be positive")
        cfg.radius, cfg.samples, cfg.t_max = args.radius, args.samples, args.t_max
    return cfg


# --- commands ---------------------------------------------------------------


def run_solve(cfg: CliConfig) -> tuple[str, int]:
    report = solve(cfg.alg, cfg.coeffs, cfg.solve_options)
    return dumps(report_to_dict(report)) + "\n", EXIT_OK


def run_verify(cfg: CliConfig) -> tuple[str, int]:
    report = solve(cfg.alg, cfg.coeffs, cfg.solve_options)
    try:
        spec = GridSpec.default_for(cfg.coeffs, **cfg.grid)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    result = grid_search_full(cfg.alg, cfg.coeffs, spec)
    agreement = match_roots(report.points(), result.findings, spec)
    doc = report_to_dict(report, command="verify")
    doc["grid"] = {
        "r_min": spec.r_min,
        "r_max": spec.r_max,
        "r_steps": spec.r_steps,
        "phi_steps": spec.phi_steps,
        "refine_iters": spec.refine_iters,
    }
    doc["findings"] = [
        {"x": g.z.x, "y": g.z.y, "residual": g.residual, "cell": list(g.cell)}
        for g in result.findings
    ]
    doc["min_residual"] = result.min_residual
    doc["agreement"] = {
        "finding_tol": 1e-6,
        "distance": 1e-4,
        "solver_to_grid": agreement.solver_to_grid,
        "grid_to_solver": agreement.grid_to_solver,
        "out_of_window": [{"x": z.x, "y": z.y} for z in agreement.out_of_window],
        "pass": agreement.ok,
    }
    return dumps(doc) + "\n", EXIT_OK if agreement.ok else EXIT_VERIFY


def run_properties(cfg: CliConfig) -> tuple[str, int]:
    report = check_laws(cfg.alg, cfg.trials, cfg.seed)
    doc = {
        "format": FORMAT_VERSION,
        "command": "properties",
        "algebra": str(report.algebra),
        "trials": report.trials,
        "seed": report.seed,
        "tol": report.tol,
        "passed": report.passed,
        "laws": {
            name: {
                "trials": stat.trials,
                "failures": stat.failures,
                "worst": stat.worst,
                "passed": stat.passed,
            }
            for name, stat in report.laws.items()
        },
    }
    return dumps(doc) + "\n", EXIT_OK if report.passed else EXIT_VERIFY


def curve_points(alg: Algebra, radius: float, samples: int, t_max: float = 3.0) -> np.ndarray:
    """``(samples, 3)`` array of ``phi, x, y``.

    Circular and phs: the level set ``||z|| = radius``, sampled at equally
    spaced Euclidean angles.  Hyperbolic: ``radius (cosh t, sinh t)`` for
    ``t`` in ``[-t_max, t_max]``; the first column then holds ``t``.
    """
    if alg.kind == "hyperbolic":
        t = np.linspace(-t_max, t_max, samples)
        return np.column_stack([t, radius * np.cosh(t), radius * np.sinh(t)])
    f = alg.functional if alg.kind == "phs" else EUCLIDEAN
    phi = np.arange(samples) * (2.0 * math.pi / samples)
    c, s = np.cos(phi), np.sin(phi)
    n = f.evaluate(c, s)
    return np.column_stack([phi, radius * c / n, radius * s / n])


def run_curve(cfg: CliConfig) -> tuple[str, int]:
    pts = curve_points(cfg.alg, cfg.radius, cfg.samples, cfg.t_max)
    buf = io.StringIO()
    buf.write("phi,x,y\n")
    for row in pts:
        buf.write(",".join(format_float(float(v)) for v in row) + "\n")
    return buf.getvalue(), EXIT_OK


COMMANDS = {
    "solve": run_solve,
    "verify": run_verify,
    "properties": run_properties,
    "curve": run_curve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        text, code = COMMANDS[cfg.subcommand](cfg)
    except ParseError as exc:
        print(f"vecquad: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedRegime as exc:
        print(f"vecquad: unsupported regime: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

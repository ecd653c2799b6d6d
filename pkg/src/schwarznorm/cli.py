"""Command line front end.

Subcommands: nphi, extremal, hypnorm, verify, figure1, coeffs.  Every
command echoes its parsed inputs and emits a single JSON object when
--json is given.  Exit codes: 0 success, 1 numeric or check failure,
2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .errors import FileFormatError, SchwarznormError
from .estimator import hyperbolic_norm, n_phi
from .extremal import build_extremal, verify_subordination_ode
from .generators import (
    GeneratorSpec,
    Kind,
    crossing_bracket,
    crossing_curve,
    custom_from_file,
    half_plane,
    phi_series,
    strongly_convex,
    uniformly_convex,
)
from .series import DEFAULT_ORDER, evaluate, read_coeff_file, schwarzian, write_coeff_file
from . import verify as verify_mod

_CLASS_CHOICES = ("kalpha", "ucv", "halfplane", "custom")


def to_json(record: dict) -> str:
    """Canonical JSON encoding; re-encoding a parsed record is byte identical."""
    return json.dumps(record, indent=2, sort_keys=True)


def _sharp_value(spec: GeneratorSpec) -> float | None:
    if spec.kind is Kind.STRONGLY_CONVEX:
        return 2.0 * spec.alpha
    if spec.kind is Kind.UNIFORMLY_CONVEX:
        return 8.0 / math.pi**2
    if spec.kind is Kind.HALF_PLANE and spec.a >= 0.5:
        return 8.0 * spec.a * (1.0 - spec.a)
    return None


def _spec_from_args(parser: argparse.ArgumentParser, args) -> GeneratorSpec:
    if args.klass == "kalpha":
        if args.alpha is None:
            parser.error("--class kalpha requires --alpha")
        return strongly_convex(args.alpha)
    if args.klass == "ucv":
        return uniformly_convex()
    if args.klass == "halfplane":
        if args.a is None:
            parser.error("--class halfplane requires --a")
        return half_plane(args.a)
    if args.coeffs is None:
        parser.error("--class custom requires --coeffs FILE")
    return custom_from_file(args.coeffs)


def _echo_inputs(args, names) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _cmd_nphi(parser, args) -> tuple[dict, int]:
    spec = _spec_from_args(parser, args)
    est = n_phi(spec, grid=args.grid, refine_iters=args.refine)
    sharp = _sharp_value(spec)
    result = {
        "generator": spec.describe(),
        "value": est.value,
        "witness": {"s": est.witness[0], "t": est.witness[1]},
        "grid_resolution": est.grid_resolution,
        "refinement_steps": est.refinement_steps,
        "is_lower_bound": est.is_lower_bound,
    }
    if sharp is not None:
        result["sharp"] = sharp
        result["gap"] = est.value - sharp
        result["qc_constant"] = sharp / 2.0
    return {"result": result}, 0


def _cmd_extremal(parser, args) -> tuple[dict, int]:
    spec = _spec_from_args(parser, args)
    ext = build_extremal(spec, args.k, args.order)
    write_coeff_file(args.out, ext.f)
    s0 = evaluate(schwarzian(ext.f), 0j)
    est = hyperbolic_norm(ext.f, r_max=args.rmax)
    sharp = _sharp_value(spec)
    result = {
        "generator": spec.describe(),
        "omega_exponent": args.k,
        "order": ext.f.order,
        "coeff_file": str(args.out),
        "schwarzian_at_0": s0.real,
        "hyperbolic_norm": est.value,
        "norm_witness": [est.witness.real, est.witness.imag],
        "subordination_mismatch": verify_subordination_ode(ext),
    }
    if sharp is not None:
        result["sharp"] = sharp
    return {"result": result}, 0


def _cmd_hypnorm(parser, args) -> tuple[dict, int]:
    f = read_coeff_file(args.coeffs)
    est = hyperbolic_norm(f, radial_samples=args.grid, angular_samples=args.grid,
                          r_max=args.rmax, refine_iters=args.refine)
    result = {
        "order": f.order,
        "value": est.value,
        "witness": [est.witness.real, est.witness.imag],
        "r_max": args.rmax,
        "is_lower_bound": est.is_lower_bound,
    }
    return {"result": result}, 0


def _cmd_verify(parser, args) -> tuple[dict, int]:
    if args.lemma is None and not args.all:
        parser.error("choose --all or --lemma NAME")
    if args.lemma is not None:
        reports = verify_mod.run_selected(args.lemma, max_n=args.max_n, grid=args.grid)
    else:
        reports = verify_mod.run_all(max_n=args.max_n, grid=args.grid)
    payload = [r.to_dict() for r in reports]
    all_passed = all(r.passed for r in reports)
    return {"result": {"reports": payload, "all_passed": all_passed}}, 0 if all_passed else 1


def _cmd_figure1(parser, args) -> tuple[dict, int]:
    alphas, values = crossing_curve(args.step)
    lines = ["alpha,value"]
    lines += [f"{float(a)!r},{float(v)!r}" for a, v in zip(alphas, values)]
    Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    result = {"csv": str(args.csv), "rows": int(alphas.size), "step": args.step}
    root = None
    if args.crossing:
        root, lo, hi = crossing_bracket(args.tol)
        result["crossing"] = {"root": root, "bracket": [lo, hi], "tol": args.tol}
    if args.png is not None:
        from .plotting import save_crossing_figure

        save_crossing_figure(alphas, values, args.png, root=root)
        result["png"] = str(args.png)
    return {"result": result}, 0


def _cmd_coeffs(parser, args) -> tuple[dict, int]:
    spec = _spec_from_args(parser, args)
    series = phi_series(spec, args.order)
    write_coeff_file(args.out, series)
    result = {
        "generator": spec.describe(),
        "order": series.order,
        "file": str(args.out),
    }
    return {"result": result}, 0


def _add_class_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--class", dest="klass", required=True, choices=_CLASS_CHOICES,
                     help="generator family")
    sub.add_argument("--alpha", type=float, help="strongly convex order in (0, 1]")
    sub.add_argument("--a", type=float, help="half-plane order in [0, 1)")
    sub.add_argument("--coeffs", help="custom generator coefficient file ('re im' per line)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER,
                        help="series truncation order (default 96)")
    common.add_argument("--grid", type=int, default=256, help="grid points per axis (default 256)")
    common.add_argument("--refine", type=int, default=40,
                        help="refinement iterations (default 40)")
    common.add_argument("--seed", type=int, default=None, help="reserved; ignored")

    parser = argparse.ArgumentParser(
        prog="schwarznorm",
        description="Sharp Schwarzian-norm bounds over subordination-defined convex classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nphi", parents=[common], help="estimate the sharp bound N(phi)")
    _add_class_options(p)
    p.set_defaults(run=_cmd_nphi, echo=("klass", "alpha", "a", "coeffs", "grid", "refine"))

    p = sub.add_parser("extremal", parents=[common],
                       help="build the extremal function and write its coefficients")
    _add_class_options(p)
    p.add_argument("--k", type=int, default=2, help="omega exponent (default 2)")
    p.add_argument("--out", default="extremal_coeffs.txt", help="output coefficient file")
    p.add_argument("--rmax", type=float, default=0.8, help="norm search radius cap")
    p.set_defaults(run=_cmd_extremal,
                   echo=("klass", "alpha", "a", "coeffs", "k", "order", "out", "rmax"))

    p = sub.add_parser("hypnorm", parents=[common],
                       help="hyperbolic sup-norm of the Schwarzian of a coefficient file")
    p.add_argument("--coeffs", required=True, help="series coefficient file ('re im' per line)")
    p.add_argument("--rmax", type=float, default=0.8, help="search radius cap (default 0.8)")
    p.set_defaults(run=_cmd_hypnorm, echo=("coeffs", "rmax", "grid", "refine"))

    p = sub.add_parser("verify", parents=[common], help="run the lemma and bound checks")
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--lemma", choices=verify_mod.lemma_names(), help="run one check group")
    p.add_argument("--max-n", dest="max_n", type=int, default=1000,
                   help="sum sweep range (default 1000)")
    p.set_defaults(run=_cmd_verify, echo=("all", "lemma", "max_n", "grid"))

    p = sub.add_parser("figure1", parents=[common],
                       help="emit the crossing-curve CSV (and optionally a rendered figure)")
    p.add_argument("--csv", default="figure1.csv", help="output CSV path")
    p.add_argument("--step", type=float, default=0.001, help="alpha grid step (default 0.001)")
    p.add_argument("--crossing", action="store_true", help="also locate the sign change")
    p.add_argument("--tol", type=float, default=1e-6, help="crossing tolerance")
    p.add_argument("--png", default=None,
                   help="also render the curve to this image file alongside the CSV")
    p.set_defaults(run=_cmd_figure1, echo=("csv", "step", "crossing", "tol", "png"))

    p = sub.add_parser("coeffs", parents=[common],
                       help="write the Taylor coefficients of a generator")
    _add_class_options(p)
    p.add_argument("--out", required=True, help="output coefficient file")
    p.set_defaults(run=_cmd_coeffs, echo=("klass", "alpha", "a", "coeffs", "order", "out"))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload, code = args.run(parser, args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except SchwarznormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    record = {
        "command": args.command,
        "inputs": _echo_inputs(args, args.echo),
        "result": payload["result"],
        "elapsed_ms": elapsed_ms,
    }
    if args.json:
        print(to_json(record))
    else:
        _print_human(record)
    return code


def _print_human(record: dict) -> None:
    print(f"[{record['command']}] inputs: {record['inputs']}")
    _print_tree(record["result"], indent="  ")
    print(f"  elapsed: {record['elapsed_ms']:.1f} ms")


def _print_tree(node, indent: str) -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _print_tree(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(node, list):
        for item in node:
            if isinstance(item, (dict, list)):
                print(f"{indent}-")
                _print_tree(item, indent + "  ")
            else:
                print(f"{indent}- {item}")
    else:
        print(f"{indent}{node}")


if __name__ == "__main__":
    sys.exit(main())

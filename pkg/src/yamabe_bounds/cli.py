"""Command-line interface: ``yamabe-bounds {bound,table,squeeze}``.

Data goes to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 success, 2 usage or domain error, 3 missing constant, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import report
from .bounds import BoundFormula, _mu1, corollary42_bound, corollary44_bound
from .errors import DomainError, MissingConstantError, NumericalError
from .model_space import ModelSpaceParams
from .mu_zero import ConstantRegistry, effective_gamma, load_registry, registry_default
from .optimizer import MinimizationConfig, minimize_bound
from .squeeze import SqueezeMap
from .tables import build_table1, build_table_tn, sigma_bounds

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_MISSING = 3
EXIT_NUMERICAL = 4

FORMATS = ("text", "csv", "json")


def _registry(args) -> ConstantRegistry:
    base = ConstantRegistry.empty() if args.registry_only else registry_default()
    if args.registry is None:
        return base
    return load_registry(args.registry, base=base)


def _config(args) -> MinimizationConfig:
    kwargs = {}
    if getattr(args, "tol", None) is not None:
        kwargs["refine_tolerance"] = args.tol
    if getattr(args, "grid", None) is not None:
        kwargs["grid_points"] = args.grid
    return MinimizationConfig(**kwargs)


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    # write next to the target, then rename, so readers never see a partial file
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".yamabe-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# subcommands


def cmd_bound(args) -> str:
    params = ModelSpaceParams(args.v, args.w)
    formula = BoundFormula(args.formula)
    if args.gamma is not None:
        gamma, source = args.gamma, "command line"
        # validate the same way registry entries are validated
        if not 0.0 < gamma <= 1.0:
            raise DomainError(f"gamma must lie in (0, 1], got {gamma!r}")
    elif formula is BoundFormula.HOMOTHETY:
        gamma, source = 1.0, "not used by the homothety bound"
    else:
        entry = effective_gamma(params, _registry(args))
        gamma, source = entry.gamma, entry.source

    if formula is BoundFormula.COROLLARY_42:
        result = corollary42_bound(params, gamma)
    elif formula is BoundFormula.COROLLARY_44:
        result = corollary44_bound(params, gamma)
    else:
        result = minimize_bound(params, gamma, formula, _config(args))

    d = report.bound_dict(result, gamma_source=source)
    d["mu1"] = _mu1(params.n)
    if args.format == "json":
        return report.canonical_json(d)
    if args.format == "csv":
        header = ("v", "w", "n", "k", "formula", "gamma", "value", "ratio", "minimizer_c",
                  "tolerance", "mu1", "evaluations", "gamma_source")
        return report.to_csv(header, [tuple(d.get(h) for h in header)])
    return report.bound_text(d)


def cmd_table(args) -> str:
    registry = _registry(args)
    config = _config(args)
    if args.which == "table1":
        rows = build_table1(registry, config)
        render = {"text": report.table1_text, "csv": report.table1_csv,
                  "json": lambda rs: report.canonical_json([report.table1_dict(r) for r in rs])}
    elif args.which == "tn":
        rows = build_table_tn(registry, config)
        render = {"text": report.tn_text, "csv": report.tn_csv,
                  "json": lambda rs: report.canonical_json([report.tn_dict(r) for r in rs])}
    else:
        rows = sigma_bounds(registry, config)
        render = {"text": report.sigma_text, "csv": report.sigma_csv,
                  "json": lambda rs: report.canonical_json([report.sigma_dict(r) for r in rs])}
    return render[args.format](rows)


def cmd_squeeze(args) -> str:
    if not args.c > 0.0:
        raise DomainError(f"c must lie in (0, 1], got {args.c!r}")
    smap = SqueezeMap(args.v, args.c, quadrature_tolerance=args.tol)
    ev = smap.evaluate(args.r)
    d = report.squeeze_dict(ev, smap.v, smap.c)
    if args.format == "json":
        return report.canonical_json(d)
    if args.format == "csv":
        header = ("v", "c", "r", "f", "f_prime", "quad_error")
        return report.to_csv(header, [tuple(d[h] for h in header)])
    return report.squeeze_text(d)


# ---------------------------------------------------------------------------
# parser


def _positive_float(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _add_common(p, registry=True, optimizer=True):
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    if registry:
        p.add_argument("--registry", metavar="FILE",
                       help="JSON constants file; its entries override the compiled defaults")
        p.add_argument("--registry-only", action="store_true",
                       help="start from an empty registry instead of the compiled defaults")
    if optimizer:
        p.add_argument("--tol", type=_positive_float,
                       help="width of the final c-bracket (default 1e-10)")
        p.add_argument("--grid", type=int, help="number of grid points scanned before refining")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yamabe-bounds",
        description="Lower bounds for conformal Yamabe constants of H^v_c x S^w "
                    "and the surgery and sigma-invariant tables built from them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="minimize a lower bound over c in [0, 1]")
    p.add_argument("--v", type=int, required=True, help="hyperbolic dimension")
    p.add_argument("--w", type=int, required=True, help="sphere dimension")
    p.add_argument("--gamma", type=float,
                   help="mu(R^v x S^w) / mu(S^(v+w)); default from the registry")
    p.add_argument("--formula", choices=[f.value for f in BoundFormula],
                   default=BoundFormula.GENERAL.value)
    _add_common(p)
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("table", help="reproduce one of the result tables")
    p.add_argument("which", choices=("table1", "tn", "sigma"))
    _add_common(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("squeeze", help="evaluate the radial squeezing map")
    p.add_argument("--v", type=int, required=True, help="hyperbolic dimension")
    p.add_argument("--c", type=float, required=True, help="curvature scale in (0, 1]")
    p.add_argument("--r", type=float, required=True, help="radius, r >= 0")
    p.add_argument("--tol", type=_positive_float, default=1e-13,
                   help="relative quadrature tolerance (default 1e-13)")
    _add_common(p, registry=False, optimizer=False)
    p.set_defaults(handler=cmd_squeeze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        text = args.handler(args)
    except MissingConstantError as exc:
        print(f"error: missing constant: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _write(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

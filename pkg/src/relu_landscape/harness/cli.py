"""Command-line front end: ``relu-landscape <command> ...``."""
from __future__ import annotations

import argparse
import sys

from ..families import FAMILIES, get_family, isotropy_from_name
from ..reduced_flow.cells import reduced_loss
from ..reduced_flow.series import fit_family_coefficients
from ..reduced_flow.solver import ContinuationError, NonConvergenceError, continue_in_d, solve_family
from ..symmetry import lift, multiplicity
from .io import fmt, write_csv, write_json

EXIT_USAGE = 2
EXIT_FAILURE = 1


class UsageError(ValueError):
    pass


def _family(name: str):
    try:
        return get_family(name)
    except KeyError as err:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from err


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError as err:
        raise UsageError(f"expected a range A:B, got {text!r}") from err
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _point_doc(f, r) -> dict:
    return {
        "family": f.name,
        "d": float(r.d),
        "coefficients": [float(c) for c in r.coeffs],
        "loss": float(reduced_loss(r)),
        "residual": r.residual,
    }


def cmd_kernel_check(args) -> int:
    from .checks import derivative_checks, kernel_checks

    checks = kernel_checks(args.pairs, args.samples, args.seed, workers=args.workers)
    checks += derivative_checks(args.configs, seed=args.seed)
    write_csv(args.out, ["check", "value", "reference", "error", "bound", "ok"],
              [[c.name, c.value, c.reference, c.error, c.bound, c.ok] for c in checks])
    failed = [c.name for c in checks if not c.ok]
    if failed:
        print(f"failed checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILURE
    return 0


def cmd_solve(args) -> int:
    f = _family(args.family)
    if not args.d > f.p + 1:
        raise UsageError(f"d must exceed {f.p + 1} for {f.name}")
    write_json(args.out, _point_doc(f, solve_family(f, args.d)))
    return 0


def cmd_continue(args) -> int:
    f = _family(args.family)
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    if min(args.d_from, args.d_to) <= f.p + 1:
        raise UsageError(f"d must exceed {f.p + 1} for {f.name}")
    start = solve_family(f, args.d_from)
    path = continue_in_d(f, args.d_from, args.d_to, args.steps, start=start)
    header = ["d"] + [f"a{i}" for i in range(1, f.m + 1)] + ["loss", "residual"]
    write_csv(args.out, header, [[r.d, *r.coeffs, reduced_loss(r), r.residual] for r in path])
    return 0


def cmd_series_verify(args) -> int:
    f = _family(args.family)
    if f.name == "identity":
        raise UsageError("the identity family is exact and has no expansion to verify")
    fits = fit_family_coefficients(f, max_m=args.max_m)
    listed_to = max(max(s) for s in f.series.values() if s)
    rows, worst = [], 0.0
    for i, fit in enumerate(fits, start=1):
        for m in range(args.max_m + 1):
            # orders up to the last listed one are zero unless given; None marks an unknown value
            listed = f.series[i].get(m, 0.0) if m <= listed_to else None
            fitted = fit.coefficient(m)
            err = None
            if listed is not None:
                err = abs(fitted - listed) / (abs(listed) if listed else 1.0)
                worst = max(worst, err)
            rows.append([f"a{i}", m, fitted, listed, err])
    write_csv(args.out, ["coefficient", "half_power", "fitted", "listed", "rel_error"], rows)
    print(f"max error over listed orders (relative, absolute for zeros): {fmt(worst)}", file=sys.stderr)
    return 0


def cmd_spectrum(args) -> int:
    from ..spectrum.dense import full_spectrum

    f = _family(args.family)
    d = int(args.d)
    if d != args.d or d < 3:
        raise UsageError("spectra need an integer d >= 3")
    pair = lift(solve_family(f, d))
    mode = "first_layer_only" if args.mode == "first-layer" else "full"
    report = full_spectrum(pair, mode, args.gap, family=f.name)
    if args.raw:
        write_csv(args.raw, ["index", "eigenvalue"], enumerate(report.raw))
    write_json(args.out, report.as_dict(args.raw))
    return 0


def cmd_stability(args) -> int:
    from ..spectrum.stability import stability_threshold

    f = _family(args.family)
    if not args.lo < args.hi:
        raise UsageError("--lo must be below --hi")
    if args.lo <= f.p + 1:
        raise UsageError(f"--lo must exceed {f.p + 1} for {f.name}")
    res = stability_threshold(f, args.lo, args.hi, tol=args.tol)
    if res.monotone:
        print(res.describe())
    else:
        print(fmt(res.d_star))
        print(res.describe(), file=sys.stderr)
    return 0


def cmd_multiplicity(args) -> int:
    try:
        fam = isotropy_from_name(args.family)
    except KeyError as err:
        raise UsageError(f"unknown family or class {args.family!r}") from err
    if args.d < fam.p + 2:
        raise UsageError("d too small for this class")
    print(multiplicity(fam, args.d))
    return 0


def cmd_sgd(args) -> int:
    from .sgd import ExperimentConfig, run_sgd

    teacher = "identity" if args.teacher == "identity" else tuple(float(v) for v in args.teacher.split(","))
    try:
        cfg = ExperimentConfig(d=args.d, k=args.d, runs=args.runs, lr=args.lr, batch=args.batch,
                               max_steps=args.max_steps, grad_tol=args.grad_tol, seed=args.seed,
                               teacher=teacher, workers=args.workers)
    except ValueError as err:
        raise UsageError(str(err)) from err
    records = run_sgd(cfg)
    header = ["seed", "final_loss", "final_grad_norm", "isotropy", "family", "refined_loss",
              "coefficient_distance", "steps", "converged", "failed", "coefficients"]
    rows = [[r.seed, r.final_loss, r.final_grad_norm, r.isotropy_name, r.family, r.refined_loss,
             r.coefficient_distance, r.steps, r.converged, r.failed,
             " ".join(fmt(c) for c in r.coefficients) if r.coefficients else None] for r in records]
    write_csv(args.out, header, rows)
    return 0


def cmd_figure1(args) -> int:
    from ..spectrum.figure import eigenvalue_rows

    f = _family(args.family)
    lo, hi = _range(args.d_range)
    if lo <= f.p + 1:
        raise UsageError(f"range must start above {f.p + 1} for {f.name}")
    rows = eigenvalue_rows(f, lo, hi)
    write_csv(args.out, ["d", "eigenvalue", "multiplicity", "rep_label"],
              [[r.d, r.value, r.multiplicity, r.rep_label] for r in rows])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="relu-landscape", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel-check", help="kernel and derivative oracle suite")
    p.add_argument("--pairs", type=int, default=20)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--configs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(run=cmd_kernel_check)

    p = sub.add_parser("solve", help="solve a family at one d")
    p.add_argument("--family", required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("continue", help="continue a family in real d")
    p.add_argument("--family", required=True)
    p.add_argument("--from", dest="d_from", type=float, required=True)
    p.add_argument("--to", dest="d_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(run=cmd_continue)

    p = sub.add_parser("series-verify", help="fit expansion coefficients and compare with the listed ones")
    p.add_argument("--family", required=True)
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(run=cmd_series_verify)

    p = sub.add_parser("spectrum", help="clustered Hessian spectrum as JSON")
    p.add_argument("--family", required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--mode", choices=["full", "first-layer"], default="full")
    p.add_argument("--gap", type=float, default=None)
    p.add_argument("--raw", help="also write every eigenvalue to this CSV")
    p.add_argument("--out")
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("stability", help="d where the minimal non-gauge eigenvalue changes sign")
    p.add_argument("--family", required=True)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-3)
    p.set_defaults(run=cmd_stability)

    p = sub.add_parser("multiplicity", help="number of critical points in the orbit")
    p.add_argument("--family", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(run=cmd_multiplicity)

    p = sub.add_parser("sgd", help="seeded SGD runs with endpoint classification")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--batch", type=int, default=64)
    p.add_argument("--max-steps", type=int, default=20000)
    p.add_argument("--grad-tol", type=float, default=1e-8)
    p.add_argument("--teacher", default="identity", help="'identity' or comma-separated diagonal entries")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(run=cmd_sgd)

    p = sub.add_parser("figure1", help="eigenvalues versus d along a family as CSV")
    p.add_argument("--family", required=True)
    p.add_argument("--d-range", required=True)
    p.add_argument("--out")
    p.set_defaults(run=cmd_figure1)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ContinuationError, NonConvergenceError, ArithmeticError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

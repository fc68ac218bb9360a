"""Command-line front end.

Subcommands:

    eval        evaluate one function at one point
    entropy     order-2 entropies of an index of coincidence
    table       evaluate on a grid and emit CSV or JSON
    crosscheck  compare all routes of a target on a grid
    verify      exact identities plus the relation suite

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical failure (an evaluation did not converge).  All output is
deterministic for a fixed argument vector, including the seeded
randomized verification.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from . import coincidence, relations
from .closed_forms import (
    FamilyParamsNeg,
    FamilyParamsPos,
    eval_family_negative,
    eval_family_positive,
    eval_sample_family,
)
from .coincidence import EntropyKind, FMethod, GMethod
from .errors import DivergentSeriesError, DomainError, UnknownRelationError
from .hypergeom import (
    Clausen3F2Params,
    Gauss2F1Params,
    clausen_3f2_unit,
    eval_hl_hypergeometric,
    gauss_2f1,
)
from .identities import (
    IDENTITY_A_SITES,
    Mutation,
    check_identity_A,
    check_identity_B,
)
from .series import (
    ConfluentHeunParams,
    GeneralHeunParams,
    SeriesOptions,
    eval_confluent_heun,
    eval_heun_local,
)

TARGETS = ("heun", "confluent", "F", "G", "K", "Kderiv", "2f1", "3f2",
           "hl-hyp", "family-neg", "family-pos", "sample-family")


@dataclass(frozen=True)
class ExitReport:
    code: int          # 0 ok, 1 verification failure, 2 usage, 3 numerical
    summary: str


def _fmt(value: float) -> str:
    """17 significant digits: enough to round-trip any double exactly."""
    return format(value, ".17g")


def emit_table(rows: list[dict], fmt: str, sink: TextIO) -> int:
    """Write rows with keys x, value, error_estimate, method; return row count."""
    if fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["x", "value", "error_estimate", "method"])
        for row in rows:
            writer.writerow([_fmt(row["x"]), _fmt(row["value"]),
                             _fmt(row["error_estimate"]), row["method"]])
    elif fmt == "json":
        json.dump(rows, sink, indent=2)
        sink.write("\n")
    else:
        raise DomainError(f"unknown output format {fmt!r}")
    return len(rows)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heunic",
        description="Multi-route evaluation and verification of Heun-type "
                    "functions and indices of coincidence.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_series_opts(p):
        p.add_argument("--max-terms", type=int, default=10000)
        p.add_argument("--rel-tol", type=float, default=1e-15)

    def add_point_args(p):
        p.add_argument("--target", required=True, choices=TARGETS)
        p.add_argument("--x", type=float)
        p.add_argument("--n", type=int)
        p.add_argument("--j", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--method")
        p.add_argument("--q", type=float)
        p.add_argument("--a", type=float)
        p.add_argument("--b", type=float)
        p.add_argument("--c", type=float)
        p.add_argument("--alpha", type=float)
        p.add_argument("--beta", type=float)
        p.add_argument("--gamma", type=float)
        p.add_argument("--delta", type=float)
        p.add_argument("--theta", type=float)
        p.add_argument("--p", type=float)
        p.add_argument("--sigma", type=float)
        p.add_argument("--a1", type=float)
        p.add_argument("--a2", type=float)
        p.add_argument("--a3", type=float)
        p.add_argument("--b1", type=float)
        p.add_argument("--b2", type=float)
        add_series_opts(p)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    add_point_args(p_eval)

    p_entropy = sub.add_parser("entropy", help="order-2 entropies of an index value")
    add_point_args(p_entropy)
    p_entropy.add_argument("--kind", required=True, choices=["renyi", "tsallis"])

    p_table = sub.add_parser("table", help="evaluate on a grid")
    add_point_args(p_table)
    p_table.add_argument("--grid", required=True,
                         help="start:stop:step (stop inclusive) or x1,x2,...")
    p_table.add_argument("--output", choices=["csv", "json"], default="csv")
    p_table.add_argument("--path", help="output file (default: stdout)")

    p_cross = sub.add_parser("crosscheck",
                             help="compare all routes of a target on a grid")
    p_cross.add_argument("--target", required=True, choices=["F", "G", "K"])
    p_cross.add_argument("--n", type=int, required=True)
    p_cross.add_argument("--grid", required=True)
    p_cross.add_argument("--tol", type=float,
                         help="fail (exit 1) if the discrepancy exceeds this")
    add_series_opts(p_cross)

    p_verify = sub.add_parser("verify",
                              help="exact identities and the relation suite")
    p_verify.add_argument("--max-n", type=int, default=50)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--tol", type=float, default=1e-7)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--mutate-identity", type=int, default=None,
                          metavar="SITE",
                          help="self-test hook: bump one binomial argument "
                               f"of identity A (site 0..{len(IDENTITY_A_SITES) - 1})")
    return parser


def _missing(args, names: list[str]) -> list[str]:
    return [f"--{n.replace('_', '-')}" for n in names
            if getattr(args, n, None) is None]


def _evaluate_point(args, x: float, opts: SeriesOptions):
    """Evaluate args.target at x; returns (value, error_estimate, method, converged)."""
    t = args.target
    need = lambda *names: _missing(args, list(names))

    def usage(missing):
        raise DomainError(f"target {t!r} requires {', '.join(missing)}")

    if t == "heun":
        missing = need("a", "q", "alpha", "beta", "gamma", "delta")
        if missing:
            usage(missing)
        params = GeneralHeunParams(args.a, args.q, args.alpha, args.beta,
                                   args.gamma, args.delta)
        r = eval_heun_local(params, x, opts)
        return r.value, r.error_estimate, "series", r.converged
    if t == "confluent":
        missing = need("p", "gamma", "delta", "alpha", "sigma")
        if missing:
            usage(missing)
        params = ConfluentHeunParams(args.p, args.gamma, args.delta,
                                     args.alpha, args.sigma)
        r = eval_confluent_heun(params, x, opts)
        return r.value, r.error_estimate, "series", r.converged
    if t == "F":
        missing = need("n")
        if missing:
            usage(missing)
        method = FMethod(args.method) if args.method else FMethod.ESTABLISHED
        return coincidence.eval_F(args.n, x, method), 0.0, method.value, True
    if t == "G":
        missing = need("n")
        if missing:
            usage(missing)
        method = GMethod(args.method) if args.method else GMethod.ESTABLISHED
        r = coincidence.eval_G(args.n, x, method, opts)
        return r.value, r.error_estimate, method.value, r.converged
    if t == "K":
        missing = need("n")
        if missing:
            usage(missing)
        r = coincidence.eval_K(args.n, x, opts)
        return r.value, r.error_estimate, "definitional", r.converged
    if t == "Kderiv":
        missing = need("n", "j")
        if missing:
            usage(missing)
        value, err = coincidence.k_derivative_quadrature(args.n, args.j, x)
        return value, err, "quadrature", True
    if t == "2f1":
        missing = need("a", "b", "c")
        if missing:
            usage(missing)
        r = gauss_2f1(Gauss2F1Params(args.a, args.b, args.c), x, opts)
        return r.value, r.error_estimate, "series", r.converged
    if t == "3f2":
        missing = need("a1", "a2", "a3", "b1", "b2")
        if missing:
            usage(missing)
        r = clausen_3f2_unit(Clausen3F2Params(args.a1, args.a2, args.a3,
                                              args.b1, args.b2), opts)
        return r.value, r.error_estimate, "accelerated", r.converged
    if t == "hl-hyp":
        missing = need("q")
        if missing:
            usage(missing)
        r = eval_hl_hypergeometric(args.q, x, opts)
        return r.value, r.error_estimate, "hypergeometric", r.converged
    if t == "family-neg":
        missing = need("n", "theta", "gamma")
        if missing:
            usage(missing)
        fp = FamilyParamsNeg(args.n, args.theta, args.gamma)
        return eval_family_negative(fp, x), 0.0, "closed", True
    if t == "family-pos":
        missing = need("n", "theta", "gamma")
        if missing:
            usage(missing)
        fp = FamilyParamsPos(args.n, args.theta, int(args.gamma))
        return eval_family_positive(fp, x), 0.0, "closed", True
    if t == "sample-family":
        missing = need("n", "i")
        if missing:
            usage(missing)
        return eval_sample_family(args.n, args.i, x), 0.0, "closed", True
    raise DomainError(f"unknown target {t!r}")


def _parse_grid(spec: str) -> list[float]:
    """start:stop:step (stop inclusive) or a comma-separated point list."""
    if ":" not in spec:
        try:
            return [float(p) for p in spec.split(",") if p.strip()]
        except ValueError:
            raise DomainError(f"cannot parse grid points {spec!r}") from None
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError("grid must be start:stop:step or a point list")
    start, stop, step = (float(p) for p in parts)
    if step <= 0.0:
        raise DomainError("grid step must be positive")
    if stop < start:
        raise DomainError("grid stop must not precede start")
    count = int((stop - start) / step + 1e-9) + 1
    return [start + i * step for i in range(count)]


def _series_options(args) -> SeriesOptions:
    return SeriesOptions(max_terms=args.max_terms, rel_tol=args.rel_tol)


def _cmd_eval(args, out: TextIO) -> ExitReport:
    # the unit-argument 3f2 target has no free abscissa
    if args.x is None and args.target != "3f2":
        raise DomainError("eval requires --x")
    opts = _series_options(args)
    value, _err, _method, converged = _evaluate_point(args, args.x or 0.0, opts)
    out.write(_fmt(value) + "\n")
    if not converged:
        return ExitReport(3, "evaluation did not converge")
    return ExitReport(0, "ok")


def _cmd_entropy(args, out: TextIO) -> ExitReport:
    if args.x is None:
        raise DomainError("entropy requires --x")
    if args.target not in ("F", "G", "K"):
        raise DomainError("entropy targets are F, G and K")
    opts = _series_options(args)
    s, _err, _method, converged = _evaluate_point(args, args.x, opts)
    value = coincidence.entropy(s, EntropyKind(args.kind))
    out.write(_fmt(value) + "\n")
    if not converged:
        return ExitReport(3, "evaluation did not converge")
    return ExitReport(0, "ok")


def _cmd_table(args, out: TextIO) -> ExitReport:
    opts = _series_options(args)
    rows = []
    all_converged = True
    for x in _parse_grid(args.grid):
        value, err, method, converged = _evaluate_point(args, x, opts)
        all_converged = all_converged and converged
        rows.append({"x": x, "value": value, "error_estimate": err,
                     "method": method})
    if args.path:
        with open(args.path, "w", encoding="utf-8", newline="") as sink:
            count = emit_table(rows, args.output, sink)
    else:
        count = emit_table(rows, args.output, out)
    if not all_converged:
        return ExitReport(3, f"{count} rows, some evaluations did not converge")
    return ExitReport(0, f"{count} rows")


_CROSSCHECK_ROUTES = {
    "F": [m.value for m in FMethod],
    "G": [m.value for m in GMethod],
    "K": ["definitional", "quadrature", "confluent-series"],
}


def _crosscheck_value(target: str, route: str, n: int, x: float,
                      opts: SeriesOptions) -> float:
    if target == "F":
        return coincidence.eval_F(n, x, FMethod(route))
    if target == "G":
        return coincidence.eval_G(n, x, GMethod(route), opts).value
    if route == "definitional":
        return coincidence.eval_K(n, x, opts).value
    if route == "quadrature":
        return coincidence.eval_K_derivative(n, 0, x)
    params = ConfluentHeunParams(n, 1.0, 0.0, 0.5, 2.0 * n)
    return eval_confluent_heun(params, x, opts).value


def _cmd_crosscheck(args, out: TextIO) -> ExitReport:
    opts = _series_options(args)
    routes = _CROSSCHECK_ROUTES[args.target]
    worst = 0.0
    worst_x = None
    for x in _parse_grid(args.grid):
        values = [_crosscheck_value(args.target, r, args.n, x, opts)
                  for r in routes]
        spread = max(values) - min(values)
        if spread > worst:
            worst, worst_x = spread, x
    out.write(f"target {args.target} n={args.n} routes={','.join(routes)}\n")
    out.write(f"max discrepancy {_fmt(worst)}"
              + (f" at x={_fmt(worst_x)}\n" if worst_x is not None else "\n"))
    if args.tol is not None and worst > args.tol:
        return ExitReport(1, "routes disagree beyond tolerance")
    return ExitReport(0, "ok")


def _cmd_verify(args, out: TextIO) -> ExitReport:
    ok = True
    mutation = None
    if args.mutate_identity is not None:
        mutation = Mutation(args.mutate_identity, 1)
    bad_a = [(n, k) for n in range(args.max_n + 1) for k in range(n + 1)
             if not check_identity_A(n, k, mutation).passed]
    if bad_a:
        ok = False
        n, k = bad_a[0]
        out.write(f"identity A: FAIL ({len(bad_a)} pairs, first at n={n} k={k})\n")
    else:
        out.write(f"identity A: PASS (all 0 <= k <= n <= {args.max_n})\n")
    bad_b = [(n, j) for n in range(args.max_n + 1) for j in range(n + 1)
             if not check_identity_B(n, j).passed]
    if bad_b:
        ok = False
        n, j = bad_b[0]
        out.write(f"identity B: FAIL ({len(bad_b)} pairs, first at n={n} j={j})\n")
    else:
        out.write(f"identity B: PASS (all 0 <= j <= n <= {args.max_n})\n")
    for relation_id in relations.RELATION_IDS:
        report = relations.check_relation(relation_id, trials=args.trials,
                                          tol=args.tol, seed=args.seed)
        status = "PASS" if report.passed else "FAIL"
        ok = ok and report.passed
        out.write(f"relation {relation_id}: {status} "
                  f"worst residual {_fmt(report.worst_residual)}\n")
    out.write("verification: " + ("PASS" if ok else "FAIL") + "\n")
    return ExitReport(0 if ok else 1, "verification " + ("passed" if ok else "failed"))


def run(argv: list[str], out: TextIO | None = None,
        err: TextIO | None = None) -> ExitReport:
    """Parse argv, dispatch, and return an ExitReport; never raises."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = 0 if exc.code in (0, None) else 2
        return ExitReport(code, "usage")
    try:
        if args.command == "eval":
            return _cmd_eval(args, out)
        if args.command == "entropy":
            return _cmd_entropy(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "crosscheck":
            return _cmd_crosscheck(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        return ExitReport(2, f"unknown command {args.command!r}")
    except (DomainError, UnknownRelationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return ExitReport(2, str(exc))
    except DivergentSeriesError as exc:
        err.write(f"numerical failure: {exc}\n")
        return ExitReport(3, str(exc))
    except OSError as exc:
        err.write(f"i/o failure: {exc}\n")
        return ExitReport(3, str(exc))


def main() -> None:
    sys.exit(run(sys.argv[1:]).code)


if __name__ == "__main__":
    main()

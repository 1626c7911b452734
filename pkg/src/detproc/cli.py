"""CSV-emitting command line front end.

Each subcommand writes exactly one CSV artifact (header row mandatory,
numbers at 17 significant digits, lattice points on the wire as doubled
integers so that x = 1 means the half-integer 1/2).  Exit status: 0 when
every invoked numerical check meets its tolerance, 1 on a failed check,
2 on usage errors, 3 on I/O errors.

Subcommands: kernel, oracle-compare, fredholm, prob, sample, correlation,
verify (suites drhp | psi | two-point | contour | special-functions | cd),
limits (studies zw-degeneration | whittaker-scaling).
"""

from __future__ import annotations

import argparse
import csv
import itertools
import math
import sys

import numpy as np

from . import drhp, kernels, oracle, sampler, special
from .errors import DomainError, ParameterError
from .partitions import YoungDiagram, fr_config, plancherel_weight

FMT = "%.17g"


def _fmt(x) -> str:
    return FMT % float(x)


def _write_csv(path: str, header, rows) -> None:
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                writer.writerow(row)
    except OSError as err:
        raise _IOFailure(str(err)) from err


class _IOFailure(Exception):
    pass


class _CheckFailure(Exception):
    pass


def _parse_z(args) -> complex:
    return complex(args.z_re, args.z_im)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _lattice_kernel(args):
    fam = args.family
    if fam == "plancherel-l":
        return kernels.plancherel_l(args.theta)
    if fam == "zw-l":
        return kernels.zw_l(_parse_z(args), args.xi)
    if fam == "bessel":
        return kernels.discrete_bessel_k(args.theta)
    if fam == "bessel-hat":
        return kernels.discrete_bessel_khat(args.theta)
    raise ParameterError(f"not a lattice family: {fam}")


def cmd_kernel(args) -> int:
    rows = []
    if args.family in ("plancherel-l", "zw-l", "bessel", "bessel-hat"):
        kern = _lattice_kernel(args)
        pts = oracle.lattice_window(args.window).points
        header = ["x_doubled", "y_doubled", "value"]
        for x in pts:
            for y in pts:
                rows.append([int(round(2 * x)), int(round(2 * y)),
                             _fmt(kern(float(x), float(y)))])
    else:
        kern = (kernels.scaled_whittaker_l(_parse_z(args))
                if args.family == "whittaker-l"
                else kernels.whittaker_kernel_k(_parse_z(args)))
        pts = [float(t) for t in args.points.split(",")]
        header = ["x", "y", "value"]
        for x in pts:
            for y in pts:
                rows.append([_fmt(x), _fmt(y), _fmt(kern(x, y))])
    _write_csv(args.output, header, rows)
    return 0


def cmd_oracle_compare(args) -> int:
    rows = []
    if args.family in ("bessel", "bessel-hat"):
        tol = args.tol if args.tol is not None else 1e-8
        kern = _lattice_kernel(args)
        lop = oracle.materialize(kernels.plancherel_l(args.theta),
                                 oracle.lattice_window(args.window))
        ref = (oracle.k_from_l(lop) if args.family == "bessel"
               else oracle.khat_from_l(lop))
        sub = [x for x in ref.window.points
               if abs(x) <= args.window - oracle.LATTICE_MARGIN - 0.5]
        worst = 0.0
        for x in sub:
            for y in sub:
                a = kern(float(x), float(y))
                b = ref.value_at(float(x), float(y))
                d = abs(a - b)
                worst = max(worst, d)
                rows.append([int(round(2 * x)), int(round(2 * y)),
                             _fmt(a), _fmt(b), _fmt(d)])
        header = ["x_doubled", "y_doubled", "analytic", "oracle", "abs_diff"]
    else:
        tol = args.tol if args.tol is not None else 1e-3
        z = _parse_z(args)
        kern = kernels.whittaker_kernel_k(z)
        ny = oracle.NystromResolvent(
            kernels.scaled_whittaker_l(z),
            oracle.quadrature_window(args.radius, args.eps, args.nodes))
        pts = [float(t) for t in args.points.split(",")]
        worst = 0.0
        for x, y in itertools.product(pts, pts):
            if x == y:
                continue
            a = kern(x, y)
            b = ny.k_at(x, y)
            d = abs(a - b)
            worst = max(worst, d)
            rows.append([_fmt(x), _fmt(y), _fmt(a), _fmt(b), _fmt(d)])
        header = ["x", "y", "analytic", "oracle", "abs_diff"]
    _write_csv(args.output, header, rows)
    if worst >= tol:
        raise _CheckFailure(f"max |analytic - oracle| = {worst:.3e} >= {tol:.1e}")
    return 0


def cmd_fredholm(args) -> int:
    lop = oracle.materialize(kernels.plancherel_l(args.theta),
                             oracle.lattice_window(args.window))
    det = oracle.fredholm_det(lop)
    target = math.exp(args.theta)
    rel = abs(det - target) / target
    _write_csv(args.output, ["det_one_plus_l", "e_theta", "rel_err"],
               [[_fmt(det), _fmt(target), _fmt(rel)]])
    if rel >= args.tol:
        raise _CheckFailure(f"relative error {rel:.3e} >= {args.tol:.1e}")
    return 0


def cmd_prob(args) -> int:
    diagram = YoungDiagram([] if not args.rows else
                           [int(r) for r in args.rows.split(",")])
    lop = oracle.materialize(kernels.plancherel_l(args.theta),
                             oracle.lattice_window(args.window))
    weight = plancherel_weight(diagram, args.theta)
    prob = oracle.prob_of_configuration(lop, sorted(fr_config(diagram)))
    rel = abs(prob - weight) / weight
    _write_csv(args.output,
               ["partition", "weight_formula", "prob_oracle", "rel_err"],
               [["|".join(str(r) for r in diagram.rows), _fmt(weight),
                 _fmt(prob), _fmt(rel)]])
    if rel >= args.tol:
        raise _CheckFailure(f"relative error {rel:.3e} >= {args.tol:.1e}")
    return 0


def cmd_sample(args) -> int:
    gen = sampler.SeededGenerator(args.seed)
    try:
        sampler.write_samples_csv(args.output, args.theta, args.n, gen)
    except OSError as err:
        raise _IOFailure(str(err)) from err
    return 0


def cmd_correlation(args) -> int:
    points = tuple(int(t) for t in args.points.split(","))
    gen = sampler.SeededGenerator(args.seed)
    est = sampler.empirical_correlation(args.theta, points, args.n, gen,
                                        n_substreams=args.substreams)
    kern = kernels.discrete_bessel_k(args.theta)
    kop = oracle.materialize(kern, oracle.lattice_window(args.window))
    pred = oracle.correlation_from_k(kop, points)
    sigmas = (abs(est.estimate - pred) / est.stderr
              if est.stderr > 0 else math.inf)
    _write_csv(args.output,
               ["points_doubled", "estimate", "stderr", "prediction", "sigmas"],
               [[" ".join(str(p) for p in points), _fmt(est.estimate),
                 _fmt(est.stderr), _fmt(pred), _fmt(sigmas)]])
    if sigmas >= args.sigma_band:
        raise _CheckFailure(f"estimate {sigmas:.2f} sigma from prediction")
    return 0


def _suite_special_functions() -> list:
    """Module invariants of the scalar special functions, as residual rows."""
    rows = []
    rng = np.random.default_rng(42)
    worst = 0.0
    for u in np.linspace(15.0, 25.0, 9):
        for nu in (-5.0, -2.5, -0.5, 0.0, 1.0, 3.5, 5.0):
            worst = max(worst, abs(special._jv_series(nu, float(u))
                                   - special._jv_hankel(nu, float(u))[0]))
    rows.append(drhp.ResidualCheck("bessel-series-vs-asymptotic",
                                   "u in [15,25], |nu|<=5", worst, 1e-9))
    worst = max(abs(special.bessel_j(-n, 2.0)
                    - (-1.0) ** n * special.bessel_j(n, 2.0))
                for n in range(1, 21))
    rows.append(drhp.ResidualCheck("bessel-negation-symmetry",
                                   "n=1..20, u=2", worst, 1e-14))
    worst = 0.0
    h = 1e-5
    for _ in range(20):
        nu = float(rng.uniform(-5, 5))
        u = float(rng.uniform(0.5, 10))
        fd = (special.bessel_j(nu + h, u) - special.bessel_j(nu - h, u)) / (2 * h)
        worst = max(worst, abs(special.bessel_j_dorder(nu, u) - fd))
    rows.append(drhp.ResidualCheck("bessel-dorder-vs-finite-difference",
                                   "20-point random grid", worst, 1e-6))
    worst = 0.0
    for i in range(10):
        kappa = float(rng.uniform(-1.5, 1.5))
        mu = float(rng.uniform(0.1, 3.0))
        x = float(rng.uniform(0.1, 30.0))
        wp = special.whittaker_w(kappa, mu, x)
        wm = special.whittaker_w(kappa, -mu, x)
        worst = max(worst, abs(wp - wm) / max(abs(wp), 1e-280))
    rows.append(drhp.ResidualCheck("whittaker-even-in-mu",
                                   "10-point random grid", worst, 1e-9))
    worst = 0.0
    for _ in range(50):
        z = complex(rng.uniform(0.1, 20), rng.uniform(-20, 20))
        lhs = special.log_gamma(z + 1.0) - special.log_gamma(z) - np.log(complex(z))
        worst = max(worst, abs(lhs))
    rows.append(drhp.ResidualCheck("log-gamma-recurrence",
                                   "50 random z, Re z > 0", worst, 1e-12))
    return rows


def _suite_cd() -> list:
    grid = np.linspace(-2.5, 2.5, 30)
    weights = np.exp(-grid ** 2)
    kern = kernels.christoffel_darboux_k(grid, weights, 5)
    rows = []
    worst = 0.0
    for x in grid:
        for y in grid:
            if x != y:
                worst = max(worst, abs(kern.sum_form(float(x), float(y))
                                       - kern.cd_form(float(x), float(y))))
    rows.append(drhp.ResidualCheck("cd-two-forms-agree", "30-point grid, N=5",
                                   worst, 1e-10))
    mat = kern.matrix()
    rows.append(drhp.ResidualCheck("cd-projection", "K.K = K",
                                   float(np.max(np.abs(mat @ mat - mat))), 1e-10))
    rows.append(drhp.ResidualCheck("cd-trace", "trace = N",
                                   abs(kern.trace() - 5.0), 1e-10))
    rows.append(drhp.ResidualCheck("cd-symmetry", "K = K^t",
                                   float(np.max(np.abs(mat - mat.T))), 1e-12))
    return rows


def cmd_verify(args) -> int:
    if args.suite == "drhp":
        rows = drhp.suite_drhp(args.theta)
    elif args.suite == "psi":
        rows = drhp.suite_psi(_parse_z(args))
    elif args.suite == "two-point":
        rows = drhp.suite_two_point(args.mu, args.nu)
    elif args.suite == "contour":
        rows = drhp.suite_contour()
    elif args.suite == "special-functions":
        rows = _suite_special_functions()
    elif args.suite == "cd":
        rows = _suite_cd()
    else:
        raise ParameterError(f"unknown suite {args.suite}")
    drhp.report_to_csv(rows, args.output)
    if not drhp.all_pass(rows):
        failed = [r.check_id for r in rows if not r.passed]
        raise _CheckFailure(f"failed checks: {', '.join(failed)}")
    return 0


def cmd_limits(args) -> int:
    rows = []
    ok = True
    if args.study == "zw-degeneration":
        theta = args.theta
        pl = kernels.plancherel_l(theta)
        pts = [k + 0.5 for k in range(-4, 4)]
        errs = []
        for absz in (20.0, 50.0, 100.0):
            kern = kernels.zw_l(complex(0.0, absz), theta / absz ** 2)
            worst = 0.0
            for x, y in itertools.product(pts, pts):
                ref = pl(x, y)
                if ref != 0.0:
                    worst = max(worst, abs(kern(x, y) - ref) / abs(ref))
            errs.append(worst)
            rows.append([_fmt(absz), _fmt(worst)])
        ok = errs[1] < 0.05 and errs[0] > errs[1] > errs[2]
        header = ["abs_z", "max_rel_err"]
    elif args.study == "whittaker-scaling":
        z = _parse_z(args)
        target = kernels.scaled_whittaker_l(z)
        sample = [0.5, 1.0, 2.0, -0.5, -1.0, -2.0]
        errs = []
        for xi in (0.9, 0.99):
            kern = kernels.zw_l(z, xi)
            scale = 1.0 - xi
            worst = 0.0
            for x, y in itertools.product(sample, sample):
                if x * y > 0:
                    continue
                lx = math.floor(x / scale) + 0.5
                ly = math.floor(y / scale) + 0.5
                worst = max(worst, abs(kern(lx, ly) / scale - target(x, y)))
            errs.append(worst)
            rows.append([_fmt(xi), _fmt(worst)])
        ok = errs[1] < errs[0]
        header = ["xi", "max_abs_err"]
    else:
        raise ParameterError(f"unknown study {args.study}")
    _write_csv(args.output, header, rows)
    if not ok:
        raise _CheckFailure(f"limit study {args.study} not converging")
    return 0


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detproc",
        description="Determinantal kernel evaluation, oracles, and checks "
                    "(CSV output; lattice points on the wire are doubled "
                    "integers).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, theta=False, z=False, xi=False):
        p.add_argument("--output", "-o", required=True, help="CSV output path")
        if theta:
            p.add_argument("--theta", type=float, default=1.0)
        if z:
            p.add_argument("--z-re", type=float, default=0.25)
            p.add_argument("--z-im", type=float, default=0.6)
        if xi:
            p.add_argument("--xi", type=float, default=0.5)

    p = sub.add_parser("kernel", help="tabulate a kernel")
    p.add_argument("--family", required=True,
                   choices=["plancherel-l", "zw-l", "bessel", "bessel-hat",
                            "whittaker-l", "whittaker"])
    p.add_argument("--window", type=int, default=10,
                   help="lattice radius M (lattice families)")
    p.add_argument("--points", default="0.5,-0.5,1,-1,2,-2",
                   help="comma list of real points (continuous families)")
    add_common(p, theta=True, z=True, xi=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("oracle-compare",
                       help="analytic kernel vs dense-window oracle")
    p.add_argument("--family", required=True,
                   choices=["bessel", "bessel-hat", "whittaker"])
    p.add_argument("--window", type=int, default=25)
    p.add_argument("--radius", type=float, default=40.0)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--nodes", type=int, default=16)
    p.add_argument("--points", default="0.5,-0.5,1,-1,2,-2")
    p.add_argument("--tol", type=float, default=None)
    add_common(p, theta=True, z=True)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("fredholm", help="det(1+L) against e^theta")
    p.add_argument("--window", type=int, default=30)
    p.add_argument("--tol", type=float, default=1e-10)
    add_common(p, theta=True)
    p.set_defaults(func=cmd_fredholm)

    p = sub.add_parser("prob", help="configuration probability vs weight formula")
    p.add_argument("--rows", default="3,3,1",
                   help="partition rows, comma separated ('' = empty)")
    p.add_argument("--window", type=int, default=30)
    p.add_argument("--tol", type=float, default=1e-12)
    add_common(p, theta=True)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("sample", help="dump Monte Carlo samples")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p, theta=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("correlation",
                       help="empirical correlation vs determinant prediction")
    p.add_argument("--points", default="1,-1",
                   help="doubled half-integers, comma separated")
    p.add_argument("--n", type=int, default=200000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--substreams", type=int, default=1)
    p.add_argument("--window", type=int, default=30)
    p.add_argument("--sigma-band", type=float, default=4.0)
    add_common(p, theta=True)
    p.set_defaults(func=cmd_correlation)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=["drhp", "psi", "two-point", "contour",
                            "special-functions", "cd"])
    p.add_argument("--mu", type=float, default=0.3)
    p.add_argument("--nu", type=float, default=0.5)
    add_common(p, theta=True, z=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limits", help="degeneration / scaling-limit studies")
    p.add_argument("--study", required=True,
                   choices=["zw-degeneration", "whittaker-scaling"])
    add_common(p, theta=True, z=True)
    p.set_defaults(func=cmd_limits)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CheckFailure as err:
        print(f"detproc: check failed: {err}", file=sys.stderr)
        return 1
    except (DomainError, ParameterError) as err:
        print(f"detproc: invalid arguments: {err}", file=sys.stderr)
        return 2
    except _IOFailure as err:
        print(f"detproc: i/o error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

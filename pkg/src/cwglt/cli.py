"""Command-line interface.

Subcommands emit CSV (or JSON for ``compare``) on stdout or to ``--output``.
All floating-point values are serialized with 17 significant digits so a
parse of the output reproduces the binary values exactly. Exit codes:
0 success, 2 usage or validation error, 3 domain error (an extremal bound on
the wrong side of the computed eigenvalue). ``--json-errors`` switches the
stderr diagnostics to a one-line JSON object.
"""

import argparse
import json
import sys

import numpy as np

from .cwanalysis import (
    NonPositiveGapError,
    berezin_deviation,
    extremal_convergence,
    full_cw_spectrum,
    nu_measure,
    zero_dist_trace_test,
)
from .distribution import compare_quantiles
from .eigen import tridiag_eigenvalues
from .fixtures import write_fixtures
from .matrices import ModelParams, cw_restricted, fd_dirichlet
from .symbols import cw_symbol, quantile, rearrangement, sample_grid, symbol_extrema

_UNSET = object()


def _fmt(x):
    return f"{float(x):.17g}"


def _params(args):
    return ModelParams(gamma=args.gamma, bfield=args.bfield)


def _size_list(text):
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("empty size list")
    return sizes


def _emit(args, lines):
    text = "\n".join(lines) + "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def _matrix_for(model, size, params):
    if size < 1:
        raise ValueError("size must be >= 1")
    if model == "restricted":
        return cw_restricted(size, params)
    if model == "fd":
        return fd_dirichlet(size, params)
    raise ValueError(f"unknown model {model!r}")


def cmd_spectrum(args):
    params = _params(args)
    if args.size < 1:
        raise ValueError("size must be >= 1")
    if args.model == "full":
        ws = full_cw_spectrum(args.size, params)
        values, weights = ws.values, ws.weights
    else:
        m = _matrix_for(args.model, args.size, params)
        values = tridiag_eigenvalues(m).values
        weights = np.full(len(values), 1.0 / len(values))
    lines = ["index,eigenvalue,weight"]
    for i, (v, w) in enumerate(zip(values, weights), start=1):
        lines.append(f"{i},{_fmt(v)},{_fmt(w)}")
    _emit(args, lines)
    return 0


def cmd_rearrange(args):
    params = _params(args)
    if args.nx < 2 or args.ntheta < 2:
        raise ValueError("grid sizes must be >= 2")
    if args.constant is not None:
        samples = np.full(args.nx * args.ntheta, args.constant)
    else:
        samples = sample_grid(cw_symbol(params), args.nx, args.ntheta)
    rearr = rearrangement(samples, grid_spec=(args.nx, args.ntheta))
    lines = ["t,psi"]
    if args.points is not None:
        if args.points < 1:
            raise ValueError("points must be >= 1")
        for i in range(1, args.points + 1):
            t = i / (args.points + 1.0)
            lines.append(f"{_fmt(t)},{_fmt(quantile(rearr, t))}")
    else:
        total = len(rearr.sorted_values)
        for i, v in enumerate(rearr.sorted_values, start=1):
            lines.append(f"{_fmt(i / (total + 1.0))},{_fmt(v)}")
    _emit(args, lines)
    return 0


def cmd_compare(args):
    params = _params(args)
    if args.nx < 64 or args.ntheta < 64:
        raise ValueError("comparison grid must be at least 64 x 64")
    m = _matrix_for(args.model, args.size, params)
    values = tridiag_eigenvalues(m).values
    psi = rearrangement(
        sample_grid(cw_symbol(params), args.nx, args.ntheta),
        grid_spec=(args.nx, args.ntheta),
    )
    report = compare_quantiles(values, psi)
    payload = {
        "sup_quantile_gap": report.sup_quantile_gap,
        "mean_abs_gap": report.mean_abs_gap,
        "ks_distance": report.ks_distance,
        "n": int(len(values)),
        "grid": [args.nx, args.ntheta],
    }
    _emit(args, [json.dumps(payload)])
    return 0


def cmd_extremal(args):
    params = _params(args)
    table = extremal_convergence(
        params,
        sizes=args.sizes,
        m_used=args.m_used,
        M_used=args.M_used,
        model=args.model,
    )
    lines = ["size,lambda_min,tau,alpha,lambda_max,tau_hat,beta"]
    for j, n in enumerate(table.sizes):
        alpha = _fmt(table.alpha[j]) if j < len(table.alpha) else ""
        beta = _fmt(table.beta[j]) if j < len(table.beta) else ""
        lines.append(
            f"{n},{_fmt(table.lambda_min[j])},{_fmt(table.tau[j])},{alpha},"
            f"{_fmt(table.lambda_max[j])},{_fmt(table.tau_hat[j])},{beta}"
        )
    lines.append(f"# model = {table.model}")
    lines.append(f"# m_used = {_fmt(table.m_used)}")
    lines.append(f"# M_used = {_fmt(table.M_used)}")
    lines.append(f"# fitted_p_min = {_fmt(table.fitted_exponents[0])}")
    lines.append(f"# fitted_p_max = {_fmt(table.fitted_exponents[1])}")
    if args.m_used is not None or args.M_used is not None:
        ext = symbol_extrema(cw_symbol(params))
        if args.m_used is not None:
            lines.append(
                f"# m_used overrides computed symbol minimum {_fmt(ext.m)}"
            )
        if args.M_used is not None:
            lines.append(
                f"# M_used overrides computed symbol maximum {_fmt(ext.M)}"
            )
    _emit(args, lines)
    return 0


def cmd_zerodist(args):
    params = _params(args)
    F = (lambda x: np.ones_like(x)) if args.ones else None
    rows = zero_dist_trace_test(args.sizes, params, F)
    lines = ["N,schatten2,mean_F2"]
    for r in rows:
        lines.append(f"{r.n_sites},{_fmt(r.schatten2)},{_fmt(r.mean_F)}")
    if args.ones:
        lines.append("# F identically 1: mean_F2 column checks weight normalization")
    _emit(args, lines)
    return 0


def cmd_nu(args):
    if args.size < 1:
        raise ValueError("size must be >= 1")
    nu = nu_measure(args.size)
    lines = ["u,mass"]
    for u, mass in zip(nu.points, nu.masses):
        lines.append(f"{_fmt(u)},{_fmt(mass)}")
    lines.append(f"# mass_sum = {_fmt(nu.total_mass())}")
    _emit(args, lines)
    return 0


def cmd_berezin(args):
    params = _params(args)
    lines = ["N,J,sup_deviation,N_times_deviation"]
    for n in args.sizes:
        if n < 1:
            raise ValueError("size must be >= 1")
        dev = berezin_deviation(n, n / 2.0, params)
        lines.append(f"{n},{_fmt(n / 2.0)},{_fmt(dev)},{_fmt(n * dev)}")
    _emit(args, lines)
    return 0


def _add_common(sub):
    sub.add_argument("--gamma", type=float, default=1.0, help="quadratic coupling (default 1)")
    sub.add_argument("--bfield", type=float, default=1.0, help="transverse field (default 1)")
    sub.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cwglt",
        description="Mean-field spin matrix sequences and their spectral-distribution checks.",
    )
    parser.add_argument(
        "--json-errors",
        action="store_true",
        help="report errors on stderr as a one-line JSON object",
    )
    parser.add_argument(
        "--fixtures",
        nargs="?",
        const=None,
        default=_UNSET,
        metavar="PATH",
        help="regenerate the pre-registered fixtures file (default: the packaged copy) and exit",
    )
    subs = parser.add_subparsers(dest="command")

    sp = subs.add_parser("spectrum", help="eigenvalues and weights of one matrix")
    sp.add_argument("--model", choices=("restricted", "full", "fd"), default="restricted")
    sp.add_argument("--size", type=int, required=True,
                    help="site count (restricted/full) or matrix size (fd)")
    _add_common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = subs.add_parser("rearrange", help="monotone rearrangement of the model symbol")
    sp.add_argument("--nx", type=int, default=200)
    sp.add_argument("--ntheta", type=int, default=200)
    sp.add_argument("--points", type=int, default=None,
                    help="emit this many quantile points instead of every sample")
    sp.add_argument("--constant", type=float, default=None,
                    help="debug: replace the symbol by this constant")
    _add_common(sp)
    sp.set_defaults(func=cmd_rearrange)

    sp = subs.add_parser("compare", help="quantile/KS distances between spectrum and symbol")
    sp.add_argument("--model", choices=("restricted", "fd"), default="restricted")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--nx", type=int, default=1000)
    sp.add_argument("--ntheta", type=int, default=1000)
    _add_common(sp)
    sp.set_defaults(func=cmd_compare)

    sp = subs.add_parser("extremal", help="extremal-eigenvalue convergence table")
    sp.add_argument("--model", choices=("fd", "restricted"), default="fd")
    sp.add_argument("--sizes", type=_size_list, default=(40, 80, 160, 320))
    sp.add_argument("--m-used", type=float, default=None,
                    help="override the symbol minimum used for the gaps")
    sp.add_argument("--M-used", dest="M_used", type=float, default=None,
                    help="override the symbol maximum used for the gaps")
    _add_common(sp)
    sp.set_defaults(func=cmd_extremal)

    sp = subs.add_parser("zerodist", help="Schatten-2 and trace-moment scan over sizes")
    sp.add_argument("--sizes", type=_size_list, default=(25, 50, 100, 200))
    sp.add_argument("--ones", action="store_true",
                    help="debug: use F identically 1 to check weight normalization")
    _add_common(sp)
    sp.set_defaults(func=cmd_zerodist)

    sp = subs.add_parser("nu", help="sector-size measure at one site count")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_nu)

    sp = subs.add_parser("berezin", help="coherent-state symbol deviation per size")
    sp.add_argument("--sizes", type=_size_list, default=(20, 40, 80, 160))
    _add_common(sp)
    sp.set_defaults(func=cmd_berezin)

    return parser


def _fail(args, message, code):
    if getattr(args, "json_errors", False):
        sys.stderr.write(json.dumps({"error": message, "exit_code": code}) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.fixtures is not _UNSET:
            _, path = write_fixtures(args.fixtures)
            sys.stdout.write(f"wrote {path}\n")
            return 0
        if args.command is None:
            parser.print_usage(sys.stderr)
            return _fail(args, "missing command", 2)
        return args.func(args)
    except NonPositiveGapError as exc:
        return _fail(args, str(exc), 3)
    except (ValueError, TypeError, OSError) as exc:
        return _fail(args, str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: table1, fig2, fig3, fsn, simulate, ratio. Exit codes:
0 success, 2 usage error, 3 input-file error. Output is deterministic:
identical flags (and seed) produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import StepSelectionModel, ratio_step
from .failsafe import (
    DEFAULT_Z_CRIT,
    ZScoreFileError,
    darlington_total,
    fail_safe_number,
    load_study_set,
    model_unpublished,
)
from .figures import (
    DEFAULT_FIG2_ALPHAS,
    DEFAULT_FIG3_RATIOS,
    csv_text,
    fig2_curves,
    fig3_contours,
    render_svg,
    table1_csv,
)
from .gaussian import TailConvention
from .piecewise import PiecewiseSelectionModel
from .simulate import CSV_COLUMNS, SimulationConfig, run_simulation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3

_TAILS = {"one": TailConvention.ONE_SIDED_UPPER, "two": TailConvention.TWO_SIDED}


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filedrawer",
        description="Publication-bias selection models, fail-safe numbers, "
        "and a seeded Monte Carlo oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: argparse.ArgumentParser, formats=("csv",), precision=4):
        p.add_argument("--format", choices=formats, default="csv")
        p.add_argument("--out", metavar="PATH", help="write here instead of stdout")
        p.add_argument(
            "--precision", type=int, default=precision, metavar="N",
            help="decimal places for csv values",
        )

    p = sub.add_parser("table1", help="r over the standard (alpha, beta) grid")
    add_output(p)  # table layout forces 2 decimals regardless of --precision

    p = sub.add_parser("fig2", help="ln r against beta for selected alphas")
    p.add_argument(
        "--alpha", type=_float_list, default=list(DEFAULT_FIG2_ALPHAS),
        metavar="LIST", help="comma-separated alphas (default .01,.05,.10)",
    )
    p.add_argument("--grid", type=int, default=99, help="points per curve")
    add_output(p, formats=("csv", "svg"))

    p = sub.add_parser("fig3", help="(alpha, beta) contours of constant r")
    p.add_argument(
        "--r", type=_float_list, default=list(DEFAULT_FIG3_RATIOS),
        metavar="LIST", help="comma-separated r values (default .5,1,2,5,19)",
    )
    p.add_argument("--grid", type=int, default=200, help="alpha grid resolution")
    p.add_argument("--alpha-min", type=float, default=0.0)
    p.add_argument("--alpha-max", type=float, default=1.0)
    add_output(p, formats=("csv", "svg"))

    p = sub.add_parser("fsn", help="fail-safe number and competing estimates")
    p.add_argument("--z-file", required=True, metavar="PATH",
                   help="one z-score per line; '#' comments and blanks ignored")
    p.add_argument("--z-crit", type=float, default=DEFAULT_Z_CRIT)
    p.add_argument("--alpha", type=float, default=0.05,
                   help="step-model tail mass for the side-by-side estimates")
    p.add_argument("--beta", type=float, default=0.0,
                   help="step-model publication probability below threshold")
    p.add_argument("--precision", type=int, default=4, metavar="N")

    p = sub.add_parser("simulate", help="seeded Monte Carlo run")
    p.add_argument("--alpha", type=float, help="step selection: tail mass")
    p.add_argument("--beta", type=float, help="step selection: step size")
    p.add_argument("--tails", choices=sorted(_TAILS), default="one")
    p.add_argument("--masses", type=_float_list, metavar="LIST",
                   help="piecewise selection: interval masses")
    p.add_argument("--probs", type=_float_list, metavar="LIST",
                   help="piecewise selection: publication probabilities")
    p.add_argument("--breakpoints", type=_float_list, metavar="LIST",
                   help="optional z-axis breakpoints (standard-normal density)")
    p.add_argument("--n", type=int, default=100_000, help="number of studies")
    p.add_argument("--seed", type=int, default=0)
    add_output(p)

    p = sub.add_parser("ratio", help="p, r and label of one (alpha, beta) pair")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--precision", type=int, default=4, metavar="N")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _figure_output(curves, x_label, y_label, args, header, rows) -> str:
    if args.format == "svg":
        labeled = [(f"{label:g}", pts) for label, pts in curves]
        return render_svg(labeled, x_label, y_label)
    return csv_text(header, rows, args.precision)


def _cmd_table1(args) -> int:
    _emit(table1_csv(), args.out)
    return EXIT_OK


def _cmd_fig2(args) -> int:
    curves = fig2_curves(args.alpha, args.grid)
    rows = [(a, b, lnr) for a, pts in curves for b, lnr in pts]
    _emit(
        _figure_output(curves, "beta", "ln r", args, ("alpha", "beta", "ln_r"), rows),
        args.out,
    )
    return EXIT_OK


def _cmd_fig3(args) -> int:
    curves = fig3_contours(args.r, args.grid, args.alpha_min, args.alpha_max)
    rows = [(r0, a, b) for r0, pts in curves for a, b in pts]
    _emit(
        _figure_output(curves, "alpha", "beta", args, ("r0", "alpha", "beta"), rows),
        args.out,
    )
    return EXIT_OK


def _cmd_fsn(args) -> int:
    studies = load_study_set(args.z_file)
    report = fail_safe_number(studies, args.z_crit)
    model = StepSelectionModel(args.alpha, args.beta)
    estimate = model_unpublished(studies.k, model)
    stats = ratio_step(model)
    total = darlington_total(studies.k, args.alpha) if args.alpha > 0 else float("inf")
    digits = args.precision
    lines = [
        f"published_studies {studies.k}",
        f"stouffer_z {report.stouffer_z:.{digits}f}",
        f"fail_safe_number {report.fsn:.{digits}f}",
        f"fail_safe_number_floor {report.fsn_floor}",
        f"fsn_implied_r {report.implied_r:.{digits}f}",
        f"fsn_implied_label {report.implied_label}",
        f"darlington_total {total:.{digits}f}",
        f"darlington_unpublished {total - studies.k:.{digits}f}",
        f"model_alpha {args.alpha:.{digits}f}",
        f"model_beta {args.beta:.{digits}f}",
        f"model_r {stats.r:.{digits}f}",
        f"model_unpublished {estimate.unpublished:.{digits}f}",
        f"model_total {estimate.total:.{digits}f}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_simulate(args) -> int:
    step_flags = args.alpha is not None or args.beta is not None
    piecewise_flags = args.masses is not None or args.probs is not None
    if step_flags and piecewise_flags:
        raise ValueError("give either --alpha/--beta or --masses/--probs, not both")
    if step_flags:
        if args.alpha is None or args.beta is None:
            raise ValueError("a step selection needs both --alpha and --beta")
        if args.breakpoints is not None:
            raise ValueError("--breakpoints applies to piecewise selections only")
        selection = StepSelectionModel(args.alpha, args.beta)
    elif piecewise_flags:
        if args.masses is None or args.probs is None:
            raise ValueError("a piecewise selection needs both --masses and --probs")
        selection = PiecewiseSelectionModel(tuple(args.masses), tuple(args.probs))
    else:
        raise ValueError("select a model: --alpha/--beta or --masses/--probs")
    config = SimulationConfig(
        n_studies=args.n,
        seed=args.seed,
        selection=selection,
        tails=_TAILS[args.tails],
        breakpoints=tuple(args.breakpoints) if args.breakpoints is not None else None,
    )
    outcome = run_simulation(config)
    row = (
        config.n_studies,
        config.seed,
        outcome.published,
        outcome.unpublished,
        outcome.p_hat,
        outcome.r_hat,
        outcome.se_p,
    )
    _emit(csv_text(CSV_COLUMNS, [row], args.precision), args.out)
    return EXIT_OK


def _cmd_ratio(args) -> int:
    stats = ratio_step(StepSelectionModel(args.alpha, args.beta))
    digits = args.precision
    sys.stdout.write(
        f"p {stats.p:.{digits}f}\nr {stats.r:.{digits}f}\nlabel {stats.label}\n"
    )
    return EXIT_OK


_COMMANDS = {
    "table1": _cmd_table1,
    "fig2": _cmd_fig2,
    "fig3": _cmd_fig3,
    "fsn": _cmd_fsn,
    "simulate": _cmd_simulate,
    "ratio": _cmd_ratio,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ZScoreFileError, OSError) as exc:
        print(f"filedrawer: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"filedrawer: {exc}", file=sys.stderr)
        return EXIT_USAGE


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    app()

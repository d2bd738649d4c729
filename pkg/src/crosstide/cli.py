"""Batch command-line front end.

Subcommands: chi, eigenframe, project, scan, figures, fit, convert. Angles
are degrees at this boundary (the library is radians-only); every file this
tool writes is deterministic: fixed column order, 17-significant-digit
floats, no timestamps, '\\n' line endings. Scan and figure grids are over
the dimensionless ratios t/lambda and rho/lambda.

Exit codes: 0 success (non-finite chi kinds included), 1 usage, 2 input
parse or I/O, 3 numerical (rank-deficient fit).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .constants import ConfigError, PhysicalConstants, TidalScale, build_constants, derive_scale, from_microgal, to_microgal
from .halilsoy import (
    HalilsoyParams,
    SpacetimePoint,
    chi_h,
    chi_h_small_alpha,
    cross_dominance,
    sector_values,
    theta_h,
)
from .residual import (
    IllConditionedError,
    SampleFormatError,
    amplitude_ratios,
    cross_channel,
    delta_a45,
    delta_a45_microgal,
    fit_quadratures,
    fit_report,
    projected_acceleration,
    read_samples_csv,
)
from .tensor import eigenframe, residual_tensor, theta_of_chi

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NUMERICAL = 3

SCAN_OUTPUTS = ("chi", "theta", "kind", "dominance", "p_h", "d_h")

#: Example residual coefficient used in eigenframe/pattern figure data.
FIGURE_EXAMPLE_CHI = 1.5

# Unit scale: eigenvalues and angles of the residual family do not depend on
# kappa_M, so figure/eigenframe tables use the dimensionless tensor directly.
_UNIT_SCALE = TidalScale(kappa_M=1.0, a0=1.0)


def _fmt(value: float) -> str:
    # 17 significant digits: exact float round trip
    return f"{value:.16e}"


@dataclass(frozen=True)
class ScanSpec:
    """Grid over (alpha, t/lambda, rho/lambda) with requested output columns."""

    alpha: tuple[float, ...]
    t_over_lambda: tuple[float, ...]
    rho_over_lambda: tuple[float, ...]
    outputs: tuple[str, ...] = SCAN_OUTPUTS

    def __post_init__(self) -> None:
        for name, axis in (
            ("alpha", self.alpha),
            ("t_over_lambda", self.t_over_lambda),
            ("rho_over_lambda", self.rho_over_lambda),
        ):
            if len(axis) < 1:
                raise ValueError(f"axis {name} needs at least one point")
        unknown = set(self.outputs) - set(SCAN_OUTPUTS)
        if unknown:
            raise ValueError(f"unknown scan outputs: {sorted(unknown)}")


def scan_rows(spec: ScanSpec):
    """Evaluate the grid in lexicographic axis order; yields one dict per point."""
    for alpha in spec.alpha:
        params = HalilsoyParams(alpha=alpha, lam=1.0)
        for t_rel in spec.t_over_lambda:
            for rho_rel in spec.rho_over_lambda:
                point = SpacetimePoint(t=t_rel, rho=rho_rel)
                row: dict[str, str] = {
                    "alpha": _fmt(alpha),
                    "t_over_lambda": _fmt(t_rel),
                    "rho_over_lambda": _fmt(rho_rel),
                }
                result = chi_h(params, point)
                sector = sector_values(params, point)
                values = {
                    "chi": _fmt(result.value) if result.is_finite else "",
                    "kind": result.kind.value,
                    "theta": _fmt(theta_h(params, point).theta),
                    "dominance": cross_dominance(params, point).value,
                    "p_h": _fmt(sector.p_h),
                    "d_h": _fmt(sector.d_h),
                }
                for key in spec.outputs:
                    row[key] = values[key]
                yield row


def write_scan_csv(spec: ScanSpec, path: str | Path) -> int:
    """Write the scan grid as CSV; returns the number of data rows."""
    columns = ["alpha", "t_over_lambda", "rho_over_lambda", *spec.outputs]
    lines = [",".join(columns)]
    count = 0
    for row in scan_rows(spec):
        lines.append(",".join(row[col] for col in columns))
        count += 1
    Path(path).write_text("\n".join(lines) + "\n")
    return count


def _axis(text: str) -> tuple[float, ...]:
    """Parse an axis flag: a single value or start:stop:steps (inclusive)."""
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise argparse.ArgumentTypeError(
                f"range must be start:stop:steps, got {text!r}"
            )
        try:
            start, stop = float(pieces[0]), float(pieces[1])
            steps = int(pieces[2])
        except ValueError:
            raise argparse.ArgumentTypeError(f"malformed range {text!r}") from None
        if steps < 1:
            raise argparse.ArgumentTypeError(f"steps must be >= 1, got {steps}")
        return tuple(float(v) for v in np.linspace(start, stop, steps))
    try:
        return (float(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or range, got {text!r}") from None


def _outputs(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    unknown = set(names) - set(SCAN_OUTPUTS)
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown outputs {sorted(unknown)}; choose from {', '.join(SCAN_OUTPUTS)}"
        )
    return names or SCAN_OUTPUTS


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):  # noqa: D102 (argparse hook)
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _constants_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("constants (defaults <- --config <- flags)")
    group.add_argument("--config", metavar="PATH", help="key = value file; keys G, M_moon, R_earth, D_earth_moon")
    group.add_argument("--G", type=float, dest="const_g", metavar="VAL", help="gravitational constant (SI)")
    group.add_argument("--M-moon", type=float, dest="const_m_moon", metavar="VAL", help="lunar mass (kg)")
    group.add_argument("--R-earth", type=float, dest="const_r_earth", metavar="VAL", help="Earth radius (m)")
    group.add_argument("--D", type=float, dest="const_d", metavar="VAL", help="Earth-Moon distance (m)")
    return parent


def _resolve_constants(args: argparse.Namespace) -> PhysicalConstants:
    return build_constants(
        config=args.config,
        G=args.const_g,
        M_moon=args.const_m_moon,
        R_earth=args.const_r_earth,
        D_earth_moon=args.const_d,
    )


def _point_args(parser: argparse.ArgumentParser, require: bool) -> None:
    parser.add_argument("--alpha", type=float, required=require, help="polarization parameter")
    parser.add_argument("--t", type=float, required=require, help="time coordinate (units of lambda)")
    parser.add_argument("--rho", type=float, required=require, help="cylindrical radius >= 0 (units of lambda)")
    parser.add_argument("--lambda", type=float, dest="lam", default=1.0, help="wavelength scale > 0 (default 1)")


def cmd_chi(args: argparse.Namespace) -> int:
    params = HalilsoyParams(alpha=args.alpha, lam=args.lam)
    point = SpacetimePoint(t=args.t, rho=args.rho)
    result = chi_h(params, point)
    print(f"chi = {_fmt(result.value) if result.is_finite else ''}")
    print(f"kind = {result.kind.value}")
    return EXIT_OK


def cmd_eigenframe(args: argparse.Namespace) -> int:
    point_mode = args.alpha is not None or args.t is not None or args.rho is not None
    if (args.chi is None) == (not point_mode):
        raise ValueError("give either --chi or the point flags --alpha/--t/--rho (one input mode)")
    if args.chi is not None:
        chi = args.chi
        print(f"chi = {_fmt(chi)}")
    else:
        if args.alpha is None or args.t is None or args.rho is None:
            raise ValueError("point mode needs all of --alpha, --t, --rho")
        params = HalilsoyParams(alpha=args.alpha, lam=args.lam)
        point = SpacetimePoint(t=args.t, rho=args.rho)
        result = chi_h(params, point)
        angle = theta_h(params, point)
        print(f"kind = {result.kind.value}")
        print(f"theta_h_rad = {_fmt(angle.theta)}")
        print(f"theta_h_deg = {_fmt(math.degrees(angle.theta))}")
        if not result.is_finite:
            # no finite chi: the regularized angle above is the diagnostic
            return EXIT_OK
        chi = result.value
        print(f"chi = {_fmt(chi)}")
    frame = eigenframe(residual_tensor(_UNIT_SCALE, chi))
    print(f"theta_rad = {_fmt(frame.theta)}")
    print(f"theta_deg = {_fmt(math.degrees(frame.theta))}")
    print(f"lambda_plus_over_kappa = {_fmt(frame.lambda_plus)}")
    print(f"lambda_minus_over_kappa = {_fmt(frame.lambda_minus)}")
    return EXIT_OK


def cmd_project(args: argparse.Namespace) -> int:
    scale = derive_scale(_resolve_constants(args))
    beta = math.radians(args.beta)
    a_par = projected_acceleration(scale, args.chi, beta)
    a_cross = cross_channel(scale, args.chi, beta)
    print(f"a_parallel_si = {_fmt(a_par)}")
    print(f"a_parallel_over_a0 = {_fmt(a_par / scale.a0)}")
    print(f"a_cross_si = {_fmt(a_cross)}")
    print(f"a_cross_over_a0 = {_fmt(a_cross / scale.a0)}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    spec = ScanSpec(
        alpha=args.alpha,
        t_over_lambda=args.t_over_lambda,
        rho_over_lambda=args.rho_over_lambda,
        outputs=args.outputs,
    )
    rows = write_scan_csv(spec, args.out)
    print(f"wrote {rows} rows to {args.out}")
    return EXIT_OK


def cmd_fit(args: argparse.Namespace) -> int:
    scale = derive_scale(_resolve_constants(args))
    samples = read_samples_csv(args.samples_csv)
    fit = fit_quadratures(samples, scale)
    report = fit_report(fit)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    print(f"chi_hat = {_fmt(fit.chi_hat)}")
    print(f"delta_a45_microgal = {_fmt(to_microgal(delta_a45(scale, fit.chi_hat)))}")
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    if args.to_microgal is not None:
        print(f"microgal = {_fmt(to_microgal(args.to_microgal))}")
    else:
        print(f"si = {_fmt(from_microgal(args.to_si))}")
    return EXIT_OK


# --------------------------------------------------------------------------
# figure data


def _write_csv(path: Path, comment: str, columns: Sequence[str], rows) -> None:
    lines = [f"# {comment}", ",".join(columns)]
    lines.extend(",".join(row) for row in rows)
    path.write_text("\n".join(lines) + "\n")


def _frame_rows(chis):
    for chi in chis:
        frame = eigenframe(residual_tensor(_UNIT_SCALE, chi))
        yield (
            _fmt(chi),
            _fmt(frame.theta),
            _fmt(math.degrees(frame.theta)),
            _fmt(frame.e_plus[0]),
            _fmt(frame.e_plus[1]),
            _fmt(frame.e_minus[0]),
            _fmt(frame.e_minus[1]),
            _fmt(frame.lambda_plus),
            _fmt(frame.lambda_minus),
        )


_FRAME_COLUMNS = (
    "chi",
    "theta_rad",
    "theta_deg",
    "e_plus_x",
    "e_plus_y",
    "e_minus_x",
    "e_minus_y",
    "lambda_plus_over_kappa",
    "lambda_minus_over_kappa",
)


def _theta_curve_rows():
    for chi in np.linspace(-10.0, 10.0, 801):
        theta = theta_of_chi(float(chi))
        yield (_fmt(float(chi)), _fmt(theta), _fmt(math.degrees(theta)))


def _pattern_rows(chis):
    betas = np.linspace(0.0, 2.0 * math.pi, 360, endpoint=False)
    for chi in chis:
        for beta in betas:
            beta = float(beta)
            value = 0.5 + 1.5 * math.cos(2.0 * beta) + chi * math.sin(2.0 * beta)
            yield (_fmt(chi), _fmt(math.degrees(beta)), _fmt(beta), _fmt(value))


def _cross_rows(chis):
    betas = np.linspace(0.0, 2.0 * math.pi, 360, endpoint=False)
    for chi in chis:
        for beta in betas:
            beta = float(beta)
            yield (_fmt(chi), _fmt(math.degrees(beta)), _fmt(beta), _fmt(chi * math.sin(2.0 * beta)))


def _chi_grid():
    return [float(v) for v in np.logspace(-4.0, 0.0, 41)]


def write_figure_data(figure: int, out_dir: str | Path, scale: TidalScale) -> list[Path]:
    """Emit the data tables behind one diagnostic figure; returns written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, comment: str, columns: Sequence[str], rows) -> None:
        path = out / name
        _write_csv(path, comment, columns, rows)
        written.append(path)

    if figure == 1:
        emit(
            "figure1_eigenframe_axes.csv",
            "principal axes of the residual tensor for chi = 0 and a rotated example",
            _FRAME_COLUMNS,
            _frame_rows([0.0, FIGURE_EXAMPLE_CHI]),
        )
    elif figure == 2:
        emit(
            "figure2_theta_response.csv",
            "universal eigenframe response theta(chi) = 0.5 arctan(2 chi / 3)",
            ("chi", "theta_rad", "theta_deg"),
            _theta_curve_rows(),
        )
    elif figure == 3:
        emit(
            "figure3_projection_pattern.csv",
            "projected acceleration a_par/a0 = 1/2 + 3/2 cos(2b) + chi sin(2b)",
            ("chi", "beta_deg", "beta_rad", "a_over_a0"),
            _pattern_rows([0.0, FIGURE_EXAMPLE_CHI]),
        )
    elif figure == 4:
        emit(
            "figure4_polar_pattern.csv",
            "polar samples of a_par/a0 for the plus-only and rotated patterns",
            ("chi", "beta_deg", "beta_rad", "a_over_a0"),
            _pattern_rows([0.0, FIGURE_EXAMPLE_CHI]),
        )
    elif figure == 5:
        emit(
            "figure5_cross_channel.csv",
            "residual-only sine-quadrature channel a_cross/a0 = chi sin(2b)",
            ("chi", "beta_deg", "beta_rad", "cross_over_a0"),
            _cross_rows([0.25, 0.5, 1.0]),
        )
    elif figure == 6:
        emit(
            "figure6_delta_a45.csv",
            "45-degree residual scale delta_a45 = a0 chi",
            ("chi", "delta_a45_si", "delta_a45_microgal"),
            (
                (_fmt(chi), _fmt(delta_a45(scale, chi)), _fmt(delta_a45_microgal(scale, chi)))
                for chi in _chi_grid()
            ),
        )
    elif figure == 7:
        emit(
            "figure7a_microgal_scale.csv",
            "residual coefficient converted to microGal, |a_cross(45 deg)| = a0 |chi|",
            ("chi", "abs_delta_a45_microgal"),
            ((_fmt(chi), _fmt(abs(delta_a45_microgal(scale, chi)))) for chi in _chi_grid()),
        )
        emit(
            "figure7b_amplitude_ratios.csv",
            "residual amplitude over Newtonian stretching (|chi|/2) and squeezing (|chi|)",
            ("chi", "ratio_to_stretch", "ratio_to_squeeze"),
            (
                (_fmt(chi), _fmt(amplitude_ratios(chi)[0]), _fmt(amplitude_ratios(chi)[1]))
                for chi in _chi_grid()
            ),
        )
        # weak-polarization scaling at a fixed reference point
        ref_point = SpacetimePoint(t=0.8, rho=1.0)
        rows = []
        for alpha in np.linspace(0.01, 0.3, 30):
            params = HalilsoyParams(alpha=float(alpha), lam=1.0)
            full = chi_h(params, ref_point)
            rows.append(
                (
                    _fmt(float(alpha)),
                    _fmt(full.value),
                    _fmt(chi_h_small_alpha(params, ref_point)),
                )
            )
        emit(
            "figure7c_small_alpha.csv",
            "chi_H vs its linear-in-alpha form at t/lambda = 0.8, rho/lambda = 1.0",
            ("alpha", "chi_full", "chi_linear"),
            rows,
        )
    elif figure == 8:
        emit(
            "figure8a_newtonian_frame.csv",
            "plus-aligned principal axes (chi = 0)",
            _FRAME_COLUMNS,
            _frame_rows([0.0]),
        )
        emit(
            "figure8b_rotated_frame.csv",
            "rotated orthogonal eigenframe for the example chi",
            _FRAME_COLUMNS,
            _frame_rows([FIGURE_EXAMPLE_CHI]),
        )
        emit(
            "figure8c_theta_response.csv",
            "universal eigenframe response theta(chi) = 0.5 arctan(2 chi / 3)",
            ("chi", "theta_rad", "theta_deg"),
            _theta_curve_rows(),
        )
        emit(
            "figure8d_cross_channel.csv",
            "residual-only sine-quadrature channel a_cross/a0 = chi sin(2b)",
            ("chi", "beta_deg", "beta_rad", "cross_over_a0"),
            _cross_rows([1.0]),
        )
    else:
        raise ValueError(f"unknown figure id {figure}; expected 1..8")
    return written


def cmd_figures(args: argparse.Namespace) -> int:
    scale = derive_scale(_resolve_constants(args))
    written = write_figure_data(args.figure, args.out_dir, scale)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    constants = _constants_parent()
    parser = _Parser(
        prog="crosstide",
        description="Off-diagonal lunar tidal residual toolkit: bridge coefficient, eigenframes, scans, figure data, quadrature fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p_chi = sub.add_parser("chi", parents=[constants], help="evaluate the bridge coefficient at one point")
    _point_args(p_chi, require=True)
    p_chi.set_defaults(func=cmd_chi)

    p_eig = sub.add_parser("eigenframe", parents=[constants], help="eigenframe of the residual tensor")
    p_eig.add_argument("--chi", type=float, help="residual coefficient (exclusive with point flags)")
    _point_args(p_eig, require=False)
    p_eig.set_defaults(func=cmd_eigenframe)

    p_proj = sub.add_parser("project", parents=[constants], help="projected acceleration at an angle")
    p_proj.add_argument("--chi", type=float, required=True, help="residual coefficient")
    p_proj.add_argument("--beta", type=float, required=True, help="angle from the Earth-Moon axis, degrees")
    p_proj.set_defaults(func=cmd_project)

    p_scan = sub.add_parser("scan", parents=[constants], help="grid scan over (alpha, t/lambda, rho/lambda)")
    p_scan.add_argument("--alpha", type=_axis, required=True, metavar="V|A:B:N")
    p_scan.add_argument("--t-over-lambda", type=_axis, required=True, metavar="V|A:B:N")
    p_scan.add_argument("--rho-over-lambda", type=_axis, required=True, metavar="V|A:B:N")
    p_scan.add_argument("--outputs", type=_outputs, default=SCAN_OUTPUTS, metavar="LIST", help=f"comma list from {{{','.join(SCAN_OUTPUTS)}}}")
    p_scan.add_argument("--out", required=True, metavar="CSV", help="output CSV path")
    p_scan.set_defaults(func=cmd_scan)

    p_fig = sub.add_parser("figures", parents=[constants], help="emit figure data tables")
    p_fig.add_argument("--figure", type=int, required=True, choices=range(1, 9), metavar="1..8")
    p_fig.add_argument("--out-dir", required=True, metavar="DIR")
    p_fig.set_defaults(func=cmd_figures)

    p_fit = sub.add_parser("fit", parents=[constants], help="quadrature fit of an angular residual CSV")
    p_fit.add_argument("samples_csv", metavar="SAMPLES.csv", help="columns beta_deg,accel_si[,sigma_si]")
    p_fit.add_argument("--out", metavar="REPORT.json", help="write the JSON report here instead of stdout")
    p_fit.set_defaults(func=cmd_fit)

    p_conv = sub.add_parser("convert", parents=[constants], help="convert between m s^-2 and microGal")
    mode = p_conv.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to-microgal", type=float, metavar="A_SI", help="acceleration in m s^-2")
    mode.add_argument("--to-si", type=float, metavar="A_UGAL", help="acceleration in microGal")
    p_conv.set_defaults(func=cmd_convert)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SampleFormatError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IllConditionedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())

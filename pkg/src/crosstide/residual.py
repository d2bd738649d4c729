"""Observational layer: projections, scales, synthesis, and the quadrature fit.

The projected acceleration a0 [1/2 + 3/2 cos(2 beta) + chi sin(2 beta)]
splits into a plus channel (constant + cos 2 beta) and the sine-quadrature
cross channel a0 chi sin(2 beta), extremal at 45/135/225/315 degrees with
scale delta_a45 = a0 chi. The least-squares fit over {1, cos 2 beta,
sin 2 beta} recovers (A0, A_c, A_s) from angular samples and estimates the
residual coefficient as chi_hat = A_s / a0.

Noise for synthetic residuals is Gaussian i.i.d. drawn from numpy's Philox
counter-based generator under the caller's seed, so synthesis is bit
reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .constants import TidalScale, to_microgal

# Above this design-matrix condition number the normal equations hand over to
# an orthogonalization (SVD-based lstsq) solve.
NORMAL_EQUATIONS_MAX_CONDITION = 1e8

# Beyond this the design is treated as rank deficient.
_RANK_DEFICIENT_CONDITION = 1e12


class IllConditionedError(RuntimeError):
    """Raised when the quadrature design matrix is rank deficient."""


class SampleFormatError(ValueError):
    """Raised for a malformed angular-sample CSV file."""


@dataclass(frozen=True)
class AngularSample:
    """One angular residual sample: beta (radians), acceleration (m s^-2)."""

    beta: float
    accel: float
    sigma: float | None = None

    def __post_init__(self) -> None:
        if self.sigma is not None and not self.sigma >= 0.0:
            raise ValueError(f"sigma must be >= 0 when present, got {self.sigma!r}")


@dataclass(frozen=True)
class QuadratureFit:
    """Fitted quadrature amplitudes (SI) plus diagnostics.

    chi_hat = a_s / a0 is the estimated off-diagonal residual coefficient.
    """

    a_const: float
    a_c: float
    a_s: float
    residual_rms: float
    condition: float
    chi_hat: float
    n_samples: int


def projected_acceleration(s: TidalScale, chi: float, beta: float) -> float:
    """a0 [1/2 + 3/2 cos(2 beta) + chi sin(2 beta)] along direction beta."""
    if not (math.isfinite(chi) and math.isfinite(beta)):
        raise ValueError(f"chi and beta must be finite, got {chi!r}, {beta!r}")
    return s.a0 * (0.5 + 1.5 * math.cos(2.0 * beta) + chi * math.sin(2.0 * beta))


def cross_channel(s: TidalScale, chi: float, beta: float) -> float:
    """Sine-quadrature residual a0 chi sin(2 beta); zero on the plus axes."""
    if not (math.isfinite(chi) and math.isfinite(beta)):
        raise ValueError(f"chi and beta must be finite, got {chi!r}, {beta!r}")
    return s.a0 * chi * math.sin(2.0 * beta)


def delta_a45(s: TidalScale, chi: float) -> float:
    """Residual scale at the 45-degree extremum: a0 chi, in m s^-2."""
    if not math.isfinite(chi):
        raise ValueError(f"chi must be finite, got {chi!r}")
    return s.a0 * chi


def delta_a45_microgal(s: TidalScale, chi: float) -> float:
    """delta_a45 expressed in microGal (about 55 chi with default constants)."""
    return to_microgal(delta_a45(s, chi))


def amplitude_ratios(chi: float) -> tuple[float, float]:
    """Residual amplitude relative to Newtonian stretching and squeezing.

    Returns (|chi|/2, |chi|): the 45-degree residual over |a_N(0)| = 2 a0
    and over |a_N(90)| = a0. Independent of a0.
    """
    if not math.isfinite(chi):
        raise ValueError(f"chi must be finite, got {chi!r}")
    return abs(chi) / 2.0, abs(chi)


def synthesize_residual(
    s: TidalScale,
    a_c_true: float,
    a_s_true: float,
    betas: Sequence[float],
    noise_sigma: float = 0.0,
    seed: int = 0,
) -> list[AngularSample]:
    """Generate residual samples A_c cos(2b) + A_s sin(2b) + N(0, sigma).

    The Gaussian noise comes from a Philox generator keyed by ``seed``;
    identical inputs produce bit-identical samples. ``noise_sigma`` is
    recorded on every sample.
    """
    if not noise_sigma >= 0.0:
        raise ValueError(f"noise_sigma must be >= 0, got {noise_sigma!r}")
    betas = [float(b) for b in betas]
    if not betas:
        raise ValueError("betas must be non-empty")
    if noise_sigma > 0.0:
        rng = np.random.Generator(np.random.Philox(seed))
        noise = rng.normal(0.0, noise_sigma, size=len(betas))
    else:
        noise = np.zeros(len(betas))
    return [
        AngularSample(
            beta=b,
            accel=a_c_true * math.cos(2.0 * b) + a_s_true * math.sin(2.0 * b) + float(noise[i]),
            sigma=noise_sigma,
        )
        for i, b in enumerate(betas)
    ]


def _deficiency_message(betas: np.ndarray, condition: float) -> str:
    distinct = np.unique(np.round(np.mod(betas, math.pi), 9)).size
    if distinct < 3:
        return (
            f"rank-deficient design: samples cover only {distinct} distinct angle(s) "
            "modulo pi, but the {1, cos 2b, sin 2b} basis needs at least 3"
        )
    return (
        f"ill-conditioned design (condition ~ {condition:.3g}): "
        "angles are nearly degenerate modulo pi"
    )


def fit_quadratures(samples: Sequence[AngularSample], s: TidalScale) -> QuadratureFit:
    """Least squares over {1, cos 2 beta, sin 2 beta}; chi_hat = A_s / a0.

    Weighted by 1/sigma^2 when every sample carries a positive sigma. Solved
    by normal equations, falling back to an SVD solve when the design-matrix
    condition exceeds 1e8; a rank-deficient design raises
    :class:`IllConditionedError` naming the deficiency.
    """
    n = len(samples)
    if n < 3:
        raise IllConditionedError(
            f"need at least 3 samples to fit 3 quadrature amplitudes, got {n}"
        )
    betas = np.array([smp.beta for smp in samples], dtype=float)
    accel = np.array([smp.accel for smp in samples], dtype=float)
    design = np.column_stack([np.ones(n), np.cos(2.0 * betas), np.sin(2.0 * betas)])

    sigmas = [smp.sigma for smp in samples]
    if all(sg is not None and sg > 0.0 for sg in sigmas):
        weights = 1.0 / np.array(sigmas, dtype=float)
        design_w = design * weights[:, None]
        accel_w = accel * weights
    else:
        design_w = design
        accel_w = accel

    singular = np.linalg.svd(design_w, compute_uv=False)
    condition = float(singular[0] / singular[-1]) if singular[-1] > 0.0 else math.inf
    if not condition < _RANK_DEFICIENT_CONDITION:
        raise IllConditionedError(_deficiency_message(betas, condition))

    if condition > NORMAL_EQUATIONS_MAX_CONDITION:
        coef = np.linalg.lstsq(design_w, accel_w, rcond=None)[0]
    else:
        coef = np.linalg.solve(design_w.T @ design_w, design_w.T @ accel_w)

    residuals = accel - design @ coef
    a_const, a_c, a_s = (float(v) for v in coef)
    return QuadratureFit(
        a_const=a_const,
        a_c=a_c,
        a_s=a_s,
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        condition=condition,
        chi_hat=a_s / s.a0,
        n_samples=n,
    )


def fit_report(fit: QuadratureFit) -> dict:
    """JSON-ready report with fixed key names."""
    return {
        "a_const_si": fit.a_const,
        "a_c_si": fit.a_c,
        "a_s_si": fit.a_s,
        "a_s_microgal": to_microgal(fit.a_s),
        "chi_hat": fit.chi_hat,
        "residual_rms_si": fit.residual_rms,
        "condition": fit.condition,
        "n_samples": fit.n_samples,
    }


def read_samples_csv(path: str | Path) -> list[AngularSample]:
    """Read angular samples from CSV: header ``beta_deg,accel_si[,sigma_si]``.

    Angles are degrees in the file, radians in the returned samples. Lines
    starting with ``#`` and blank lines are skipped. Malformed content raises
    :class:`SampleFormatError` carrying the offending line number.
    """
    samples: list[AngularSample] = []
    header: list[str] | None = None
    has_sigma = False
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise SampleFormatError(f"cannot read samples file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [cell.strip() for cell in line.split(",")]
        if header is None:
            if parts == ["beta_deg", "accel_si"]:
                has_sigma = False
            elif parts == ["beta_deg", "accel_si", "sigma_si"]:
                has_sigma = True
            else:
                raise SampleFormatError(
                    f"{path}:{lineno}: header must be 'beta_deg,accel_si[,sigma_si]', got {line!r}"
                )
            header = parts
            continue
        if len(parts) != len(header):
            raise SampleFormatError(
                f"{path}:{lineno}: expected {len(header)} columns, got {len(parts)}"
            )
        try:
            values = [float(cell) for cell in parts]
        except ValueError:
            raise SampleFormatError(f"{path}:{lineno}: non-numeric value in {line!r}") from None
        sigma = values[2] if has_sigma else None
        if sigma is not None and sigma < 0.0:
            raise SampleFormatError(f"{path}:{lineno}: sigma_si must be >= 0, got {sigma}")
        samples.append(AngularSample(beta=math.radians(values[0]), accel=values[1], sigma=sigma))
    if header is None:
        raise SampleFormatError(f"{path}: empty samples file (header row required)")
    if not samples:
        raise SampleFormatError(f"{path}: no data rows after the header")
    return samples


def write_samples_csv(path: str | Path, samples: Sequence[AngularSample]) -> None:
    """Write samples in the CSV format read back by :func:`read_samples_csv`."""
    if not samples:
        raise ValueError("samples must be non-empty")
    with_sigma = all(smp.sigma is not None for smp in samples)
    lines = ["beta_deg,accel_si,sigma_si" if with_sigma else "beta_deg,accel_si"]
    for smp in samples:
        row = f"{math.degrees(smp.beta):.16e},{smp.accel:.16e}"
        if with_sigma:
            row += f",{smp.sigma:.16e}"
        lines.append(row)
    Path(path).write_text("\n".join(lines) + "\n")

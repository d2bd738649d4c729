"""Weak-field tidal sector of the cross-polarized cylindrical standing wave.

Standing-wave factors Q0 = J0(rho/lam) cos(t/lam), Q1 = J1(rho/lam) cos(t/lam)
and W = J1(rho/lam) sin(t/lam); the radial plus-sector factor
D_H(rho) = 2 J0(rho/lam) - (lam/rho) J1(rho/lam) with its removable
singularity D_H(0) = 3/2; the cross numerator C_H = sinh(alpha) W; the
quadrant-preserving eigenframe angle theta_H = 0.5 atan2(N_H, D_H cos); and
the bridge coefficient

    chi_H = 3 sinh(alpha) J1(rho/lam) sin(t/lam) / [D_H(rho) cos(t/lam)],

which transfers the wave's cross-to-plus rotation ratio onto the lunar
residual tensor. Near plus-sector zeros chi_H is tagged rather than returned
as a number: large values there reflect the ratio becoming a poor variable,
not a physical divergence, and the angle is the better diagnostic.

The amplitude epsilon scales only the raw tidal block; it cancels in chi_H,
theta_H, and the dominance classification. In weak-field language the block
plays the role of the tidal matrix of a transverse metric perturbation
(-1/2 d^2/dt^2 of it, up to sign conventions); no waveform itself is modeled
here, and no geodesics are integrated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .bessel import bessel_j0, bessel_j1
from .tensor import SymmetricTensor2

#: Relative floor below which the plus-sector denominator counts as zero.
ZERO_FLOOR = 1e-12

#: Default dominance margin: "much greater" read as one decade.
DEFAULT_MARGIN = 10.0

# Below this rho/lam, (lam/rho) J1(rho/lam) switches to its power series.
_RHO_SERIES_MAX = 1e-3


class ChiKind(Enum):
    FINITE = "finite"
    CROSS_DOMINANT_DIVERGENT = "cross_dominant_divergent"
    DEGENERATE_ZERO_OVER_ZERO = "degenerate_zero_over_zero"


class Dominance(Enum):
    CROSS_DOMINANT = "cross_dominant"
    PLUS_DOMINANT = "plus_dominant"
    MIXED = "mixed"


@dataclass(frozen=True)
class HalilsoyParams:
    """Wave parameters: polarization alpha, wavelength scale lam, amplitude epsilon."""

    alpha: float
    lam: float = 1.0
    epsilon: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        if not (math.isfinite(self.lam) and self.lam > 0.0):
            raise ValueError(f"lam must be finite and positive, got {self.lam!r}")
        if not (math.isfinite(self.epsilon) and self.epsilon >= 0.0):
            raise ValueError(f"epsilon must be finite and non-negative, got {self.epsilon!r}")


@dataclass(frozen=True)
class SpacetimePoint:
    """Evaluation point: time t and cylindrical radius rho >= 0 (units of lam)."""

    t: float
    rho: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.t):
            raise ValueError(f"t must be finite, got {self.t!r}")
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise ValueError(f"rho must be finite and non-negative, got {self.rho!r}")


@dataclass(frozen=True)
class SectorValues:
    """All standing-wave factors at one point; p_h = d_h cos(t/lam), n_h = 2 c_h."""

    q0: float
    q1: float
    w: float
    p_h: float
    d_h: float
    c_h: float
    n_h: float


@dataclass(frozen=True)
class ChiResult:
    """chi_H tagged with the classification of its denominator.

    ``value`` is present exactly when ``kind`` is FINITE.
    """

    kind: ChiKind
    value: float | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind is ChiKind.FINITE


@dataclass(frozen=True)
class AngleResult:
    """Eigenframe angle with a degeneracy flag (both sectors below floor)."""

    theta: float
    degenerate: bool = False


def _j1_over_u(u: float, j1u: float) -> float:
    # J1(u)/u; the removable singularity at u = 0 is resolved by the series
    # 1/2 - u^2/16 + u^4/384, whose truncation error is < 1e-22 for u < 1e-3
    if u < _RHO_SERIES_MAX:
        u2 = u * u
        return 0.5 - u2 / 16.0 + u2 * u2 / 384.0
    return j1u / u


def _factors(p: HalilsoyParams, x: SpacetimePoint) -> tuple[float, float, float, float, float]:
    u = x.rho / p.lam
    phase = x.t / p.lam
    j0u = bessel_j0(u)
    j1u = bessel_j1(u)
    d_h = 2.0 * j0u - _j1_over_u(u, j1u)
    return u, phase, j0u, j1u, d_h


def _classify(n_h: float, denom: float) -> ChiKind:
    # denominator floor is relative to the cross numerator so that enhancement
    # regions are tagged consistently whatever the overall sector amplitude
    if abs(denom) >= ZERO_FLOOR * max(1.0, abs(n_h)):
        return ChiKind.FINITE
    if abs(n_h) < ZERO_FLOOR * max(1.0, abs(denom)):
        return ChiKind.DEGENERATE_ZERO_OVER_ZERO
    return ChiKind.CROSS_DOMINANT_DIVERGENT


def sector_values(p: HalilsoyParams, x: SpacetimePoint) -> SectorValues:
    """Evaluate Q0, Q1, W, P_H, D_H, C_H, N_H at one spacetime point."""
    u, phase, j0u, j1u, d_h = _factors(p, x)
    cph = math.cos(phase)
    sph = math.sin(phase)
    w = j1u * sph
    c_h = math.sinh(p.alpha) * w
    return SectorValues(
        q0=j0u * cph,
        q1=j1u * cph,
        w=w,
        p_h=d_h * cph,
        d_h=d_h,
        c_h=c_h,
        n_h=2.0 * c_h,
    )


def theta_h(p: HalilsoyParams, x: SpacetimePoint) -> AngleResult:
    """Quadrant-preserving eigenframe angle 0.5 * atan2(N_H, D_H cos(t/lam)).

    Stays well defined through sign changes of the plus-sector denominator;
    flagged degenerate (theta = 0 by convention) only where both the cross
    numerator and the denominator sit below the zero floor.
    """
    s = sector_values(p, x)
    if _classify(s.n_h, s.p_h) is ChiKind.DEGENERATE_ZERO_OVER_ZERO:
        return AngleResult(theta=0.0, degenerate=True)
    return AngleResult(theta=0.5 * math.atan2(s.n_h, s.p_h))


def chi_h(p: HalilsoyParams, x: SpacetimePoint) -> ChiResult:
    """Bridge coefficient chi_H = 3 C_H / P_H, tagged by denominator class."""
    s = sector_values(p, x)
    kind = _classify(s.n_h, s.p_h)
    if kind is not ChiKind.FINITE:
        return ChiResult(kind=kind)
    return ChiResult(kind=ChiKind.FINITE, value=3.0 * s.c_h / s.p_h)


def chi_h_compact(p: HalilsoyParams, x: SpacetimePoint) -> ChiResult:
    """chi_H in factored form 3 sinh(alpha) [J1/D_H] tan(t/lam).

    Agrees with :func:`chi_h` to relative 1e-12 wherever both are finite.
    """
    u, phase, j0u, j1u, d_h = _factors(p, x)
    n_h = 2.0 * math.sinh(p.alpha) * j1u * math.sin(phase)
    kind = _classify(n_h, d_h * math.cos(phase))
    if kind is not ChiKind.FINITE:
        return ChiResult(kind=kind)
    return ChiResult(kind=ChiKind.FINITE, value=3.0 * math.sinh(p.alpha) * (j1u / d_h) * math.tan(phase))


def chi_h_small_alpha(p: HalilsoyParams, x: SpacetimePoint) -> float:
    """Weak-polarization form 3 alpha [J1/D_H] tan(t/lam), linear in alpha.

    Differs from the full coefficient by the factor sinh(alpha)/alpha, i.e.
    by O(alpha^3); callers are expected to have checked the denominator via
    :func:`chi_h` first.
    """
    u, phase, j0u, j1u, d_h = _factors(p, x)
    if d_h == 0.0:
        raise ValueError("plus-sector radial factor D_H vanishes at this point")
    return 3.0 * p.alpha * (j1u / d_h) * math.tan(phase)


def cross_dominance(p: HalilsoyParams, x: SpacetimePoint, margin: float = DEFAULT_MARGIN) -> Dominance:
    """Classify which sector dominates the eigenframe rotation at a point.

    CROSS_DOMINANT when |N_H| > margin * |P_H|, PLUS_DOMINANT when
    |P_H| > margin * |N_H|, MIXED otherwise.
    """
    if not margin >= 1.0:
        raise ValueError(f"margin must be >= 1, got {margin!r}")
    s = sector_values(p, x)
    if abs(s.n_h) > margin * abs(s.p_h):
        return Dominance.CROSS_DOMINANT
    if abs(s.p_h) > margin * abs(s.n_h):
        return Dominance.PLUS_DOMINANT
    return Dominance.MIXED


def raw_tidal_block(p: HalilsoyParams, x: SpacetimePoint) -> SymmetricTensor2:
    """Epsilon-scaled transverse tidal block in the (phi, z) plane.

    (epsilon / 2 lam^2) [[-Q0 + (lam/rho) Q1, -sinh(alpha) W],
                         [-sinh(alpha) W,      Q0]]
    with the rho = 0 column handled by the (lam/rho) Q1 series limit. Its
    diagonal contrast is -(epsilon / 2 lam^2) P_H and its eigenframe axes
    coincide with the theta_h frame; epsilon cancels in the angle.
    """
    u, phase, j0u, j1u, d_h = _factors(p, x)
    scale = p.epsilon / (2.0 * p.lam * p.lam)
    cph = math.cos(phase)
    q0 = j0u * cph
    lam_over_rho_q1 = _j1_over_u(u, j1u) * cph
    c_h = math.sinh(p.alpha) * j1u * math.sin(phase)
    return SymmetricTensor2(
        a=scale * (-q0 + lam_over_rho_q1),
        b=-scale * c_h,
        c=scale * q0,
    )

"""2x2 symmetric tidal tensor algebra.

The Newtonian block kappa_M diag(2, -1), its off-diagonal residual extension
kappa_M [[2, chi], [chi, -1]], orthogonal eigen-decomposition with the
principal-axis angle, and surface projection along a direction beta from the
Earth-Moon axis. The residual family satisfies the closed-form rotation law
theta = 0.5 arctan(2 chi / 3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import TidalScale


@dataclass(frozen=True)
class SymmetricTensor2:
    """Symmetric tensor [[a, b], [b, c]]; only one off-diagonal is stored."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Direction:
    """Unit direction at angle beta (radians) from the Earth-Moon axis."""

    beta: float


@dataclass(frozen=True)
class EigenFrame:
    """Orthogonal eigen-decomposition with lambda_plus >= lambda_minus.

    theta is the angle of e_plus, in (-pi/2, pi/2], so e_plus always has a
    non-negative x component. Isotropic tensors carry ``degenerate=True`` and
    theta = 0 by convention.
    """

    lambda_plus: float
    lambda_minus: float
    theta: float
    e_plus: tuple[float, float]
    e_minus: tuple[float, float]
    degenerate: bool = False


def newtonian_tensor(s: TidalScale) -> SymmetricTensor2:
    """kappa_M diag(2, -1): stretch along the Earth-Moon axis, squeeze across.

    This is the in-plane restriction of the trace-free three-dimensional
    quadrupole kappa_M diag(2, -1, -1); only the 2x2 block is modeled here.
    """
    return SymmetricTensor2(a=2.0 * s.kappa_M, b=0.0, c=-s.kappa_M)


def residual_tensor(s: TidalScale, chi: float) -> SymmetricTensor2:
    """Newtonian block plus the dimensionless off-diagonal coefficient chi."""
    if not math.isfinite(chi):
        raise ValueError(f"chi must be finite, got {chi!r}")
    return SymmetricTensor2(a=2.0 * s.kappa_M, b=chi * s.kappa_M, c=-s.kappa_M)


def eigenframe(t: SymmetricTensor2) -> EigenFrame:
    """Eigenvalues, unit eigenvectors, and principal-axis angle of a tensor.

    theta = 0.5 * atan2(2b, a - c) keeps the quadrant of the double angle;
    for the residual family a - c = 3 kappa_M > 0, so theta lands in
    (-pi/4, pi/4) automatically.
    """
    if not all(map(math.isfinite, (t.a, t.b, t.c))):
        raise ValueError(f"tensor components must be finite, got {t!r}")
    if t.b == 0.0 and t.a == t.c:
        # isotropic: eigenvalues coincide, no preferred axes
        return EigenFrame(
            lambda_plus=t.a,
            lambda_minus=t.c,
            theta=0.0,
            e_plus=(1.0, 0.0),
            e_minus=(0.0, 1.0),
            degenerate=True,
        )
    theta = 0.5 * math.atan2(2.0 * t.b, t.a - t.c)
    mean = 0.5 * (t.a + t.c)
    radius = math.hypot(0.5 * (t.a - t.c), t.b)
    ct = math.cos(theta)
    st = math.sin(theta)
    return EigenFrame(
        lambda_plus=mean + radius,
        lambda_minus=mean - radius,
        theta=theta,
        e_plus=(ct, st),
        e_minus=(-st, ct),
    )


def theta_of_chi(chi: float) -> float:
    """Eigenframe rotation of the residual family: 0.5 * arctan(2 chi / 3).

    Odd and strictly increasing in chi, linear (chi/3) for small chi, and
    saturating at +-pi/4 for large |chi|.
    """
    if not math.isfinite(chi):
        raise ValueError(f"chi must be finite, got {chi!r}")
    return 0.5 * math.atan(2.0 * chi / 3.0)


def project(t: SymmetricTensor2, d: Direction, r_earth: float) -> float:
    """Projected surface acceleration R_E * n(beta)^T T n(beta).

    For the residual family this equals a0 [1/2 + 3/2 cos(2 beta)
    + chi sin(2 beta)].
    """
    cb = math.cos(d.beta)
    sb = math.sin(d.beta)
    return r_earth * (t.a * cb * cb + 2.0 * t.b * sb * cb + t.c * sb * sb)

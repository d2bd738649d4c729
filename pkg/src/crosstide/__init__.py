"""Off-diagonal lunar tidal residual toolkit.

Tidal tensor algebra for the Newtonian block and its off-diagonal residual
extension, the cross-polarized cylindrical standing-wave sector that supplies
the bridge coefficient chi_H(alpha, t, rho), the sine-quadrature acceleration
channel a0 chi sin(2 beta), and the quadrature least-squares fit mapping a
measured sine amplitude A_s back to chi_hat = A_s / a0.
"""

from .bessel import BesselValue, bessel_j0, bessel_j0_j1, bessel_j1
from .constants import (
    ConfigError,
    PhysicalConstants,
    TidalScale,
    build_constants,
    derive_scale,
    from_microgal,
    load_config,
    to_microgal,
)
from .halilsoy import (
    AngleResult,
    ChiKind,
    ChiResult,
    Dominance,
    HalilsoyParams,
    SectorValues,
    SpacetimePoint,
    chi_h,
    chi_h_compact,
    chi_h_small_alpha,
    cross_dominance,
    raw_tidal_block,
    sector_values,
    theta_h,
)
from .residual import (
    AngularSample,
    IllConditionedError,
    QuadratureFit,
    SampleFormatError,
    amplitude_ratios,
    cross_channel,
    delta_a45,
    delta_a45_microgal,
    fit_quadratures,
    fit_report,
    projected_acceleration,
    read_samples_csv,
    synthesize_residual,
    write_samples_csv,
)
from .tensor import (
    Direction,
    EigenFrame,
    SymmetricTensor2,
    eigenframe,
    newtonian_tensor,
    project,
    residual_tensor,
    theta_of_chi,
)

__version__ = "0.1.0"

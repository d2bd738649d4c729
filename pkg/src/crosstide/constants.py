"""Physical constants, the lunar tidal scale, and gravimetric unit conversions.

All library computation is in SI; microGal appears only at presentation
boundaries (CLI output, figure data, fit reports).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from pathlib import Path

# Defaults: CODATA G, lunar mass, mean Earth radius, mean Earth-Moon distance.
DEFAULT_G = 6.6743e-11  # m^3 kg^-1 s^-2
DEFAULT_M_MOON = 7.342e22  # kg
DEFAULT_R_EARTH = 6.371e6  # m
DEFAULT_D_EARTH_MOON = 3.844e8  # m

#: Keys accepted in a constants config file (``key = value``, SI units).
CONFIG_KEYS = ("G", "M_moon", "R_earth", "D_earth_moon")


class ConfigError(ValueError):
    """Raised for an unreadable or malformed constants config file."""


@dataclass(frozen=True)
class PhysicalConstants:
    """Gravitational constant and Earth-Moon system parameters, SI units."""

    G: float = DEFAULT_G
    M_moon: float = DEFAULT_M_MOON
    R_earth: float = DEFAULT_R_EARTH
    D_earth_moon: float = DEFAULT_D_EARTH_MOON

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(
                    f"{f.name} must be finite and strictly positive, got {value!r}"
                )


@dataclass(frozen=True)
class TidalScale:
    """Derived lunar tidal scale.

    kappa_M = G * M_moon / D^3 (s^-2) is the tidal curvature scale and
    a0 = kappa_M * R_earth (m s^-2) the surface acceleration scale; with the
    default constants a0 is about 5.5e-7 m s^-2.
    """

    kappa_M: float
    a0: float


def derive_scale(c: PhysicalConstants) -> TidalScale:
    """Compute the tidal scale (kappa_M, a0) from system constants."""
    for name in ("G", "M_moon", "R_earth", "D_earth_moon"):
        value = getattr(c, name)
        if not (math.isfinite(value) and value > 0.0):
            raise ValueError(f"{name} must be finite and strictly positive, got {value!r}")
    kappa = c.G * c.M_moon / c.D_earth_moon**3
    return TidalScale(kappa_M=kappa, a0=kappa * c.R_earth)


def to_microgal(a_si: float) -> float:
    """Convert an acceleration from m s^-2 to microGal (1 uGal = 1e-8 m s^-2)."""
    return a_si * 1e8


def from_microgal(a_microgal: float) -> float:
    """Convert an acceleration from microGal to m s^-2."""
    return a_microgal / 1e8


def load_config(path: str | Path) -> dict[str, float]:
    """Parse a ``key = value`` constants file.

    Recognised keys: G, M_moon, R_earth, D_earth_moon (SI units).
    Blank lines and ``#`` comments are ignored.
    """
    values: dict[str, float] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        if key not in CONFIG_KEYS:
            raise ConfigError(
                f"{path}:{lineno}: unknown key {key!r} (expected one of {', '.join(CONFIG_KEYS)})"
            )
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: non-numeric value {value.strip()!r}") from None
    return values


def build_constants(
    config: str | Path | None = None,
    *,
    G: float | None = None,
    M_moon: float | None = None,
    R_earth: float | None = None,
    D_earth_moon: float | None = None,
) -> PhysicalConstants:
    """Resolve constants: defaults, then config file, then explicit overrides."""
    merged: dict[str, float] = {}
    if config is not None:
        merged.update(load_config(config))
    for key, override in (
        ("G", G),
        ("M_moon", M_moon),
        ("R_earth", R_earth),
        ("D_earth_moon", D_earth_moon),
    ):
        if override is not None:
            merged[key] = override
    return PhysicalConstants(**merged)

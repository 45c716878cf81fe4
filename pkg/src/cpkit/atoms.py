"""Atomic dynamic polarizability models and geometric expansion parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.constants import c

from .errors import TableError

__all__ = [
    "StaticAtom",
    "OscillatorAtom",
    "TabulatedAtom",
    "OscillatorGeometry",
    "polarizability_at",
    "geometry_params",
]


@dataclass(frozen=True)
class StaticAtom:
    """Frequency-independent polarizability alpha(0)."""

    alpha0: float  # m^3
    mass: float = 0.0  # kg

    kind = "static"

    def __post_init__(self):
        if self.alpha0 <= 0.0:
            raise ValueError("alpha0 must be positive")

    def polarizability(self, xi):
        return self.alpha0


@dataclass(frozen=True)
class OscillatorAtom:
    """Single-resonance polarizability alpha(0)/(1 + (xi/omega0)**2).

    Accurate to better than 1% against full polarizability data only for
    separations above roughly 50-70 nm; results below that range should be
    treated as unvalidated.
    """

    alpha0: float  # m^3
    omega0: float  # rad/s
    mass: float = 0.0  # kg

    kind = "oscillator"

    def __post_init__(self):
        if self.alpha0 <= 0.0:
            raise ValueError("alpha0 must be positive")
        if self.omega0 <= 0.0:
            raise ValueError("omega0 must be positive")

    def polarizability(self, xi):
        r = xi / self.omega0
        return self.alpha0 / (1.0 + r * r)

    @property
    def absorption_wavelength(self):
        """Characteristic absorption wavelength 2*pi*c/omega0 in metres."""
        return 2.0 * math.pi * c / self.omega0


@dataclass(frozen=True)
class TabulatedAtom:
    """Tabulated alpha(i*xi) with log-linear interpolation.

    Below the grid the static value alpha(xi_min) is used; above it the
    polarizability continues with an inverse-square tail, the universal
    high-frequency behaviour.
    """

    xi: np.ndarray  # rad/s
    alpha: np.ndarray  # m^3
    mass: float = 0.0  # kg

    kind = "tabulated"

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=float)
        alpha = np.asarray(self.alpha, dtype=float)
        if xi.ndim != 1 or xi.shape != alpha.shape or xi.size < 2:
            raise TableError("xi and alpha must be 1-d arrays of equal length >= 2")
        if xi[0] <= 0.0 or np.any(np.diff(xi) <= 0.0):
            raise TableError("xi must be positive and strictly increasing")
        if np.any(alpha <= 0.0):
            raise TableError("alpha must be positive")
        xi.setflags(write=False)
        alpha.setflags(write=False)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "alpha", alpha)

    def polarizability(self, xi):
        grid = self.xi
        if xi <= grid[0]:
            return float(self.alpha[0])
        if xi >= grid[-1]:
            tail = grid[-1] / xi
            return float(self.alpha[-1]) * tail * tail
        value = np.interp(math.log(xi), np.log(grid), np.log(self.alpha))
        return float(math.exp(value))


def polarizability_at(atom, xi):
    """Dynamic polarizability alpha(i*xi) in m^3, xi in rad/s >= 0."""
    if xi < 0.0:
        raise ValueError("xi must be non-negative")
    return atom.polarizability(xi)


class OscillatorGeometry(NamedTuple):
    """Dimensionless expansion parameters of a separation.

    beta_a = lambda0/(4*pi*a) compares the separation with the atomic
    absorption wavelength; delta0_over_a = lambda_p/(2*pi*a) is the relative
    skin depth of the wall.
    """

    beta_a: float
    delta0_over_a: float


def geometry_params(atom, wall, separation):
    """Expansion parameters (beta_a, delta0/a) for an atom-wall pair."""
    if separation <= 0.0:
        raise ValueError("separation must be positive")
    if isinstance(atom, OscillatorAtom):
        beta = atom.absorption_wavelength / (4.0 * math.pi * separation)
    elif isinstance(atom, StaticAtom):
        beta = 0.0
    else:
        raise ValueError("atom model has no single characteristic resonance")
    lam_p = getattr(wall, "plasma_wavelength", None)
    if lam_p is None:
        raise ValueError("wall model has no plasma wavelength")
    return OscillatorGeometry(beta, lam_p / (2.0 * math.pi * separation))

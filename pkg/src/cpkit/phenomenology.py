"""Dispersion coefficients and the interpolating surface potential used in
quantum-reflection analyses.

The phenomenological potential E(a) = -C4/(a^3 (a + l)) bridges the
nonretarded -C3/a^3 regime and the retarded -C4/a^4 regime with l = C4/C3.
``relative_difference`` quantifies its error against the full theory, and
``rho_parameter`` classifies which regime dominates quantum reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from scipy.constants import hbar, c
from scipy.integrate import quad

from .atoms import polarizability_at
from .errors import UnsupportedModelError
from .lifshitz import zero_temperature_energy
from .materials import IdealMetal, permittivity_at

__all__ = [
    "DispersionCoefficients",
    "PhenomenologicalPotential",
    "C4Estimate",
    "c3",
    "c4_ideal",
    "c4_lifshitz",
    "phenomenological_energy",
    "relative_difference",
    "rho_parameter",
]

C3_EPSREL = 1e-7


@dataclass(frozen=True)
class DispersionCoefficients:
    """van der Waals and retarded coefficients with their length scale.

    ``c3_source``/``c4_source`` record whether each value was computed here
    or supplied by configuration; output tables must preserve that tag.
    """

    c3: float  # J m^3
    c4: float  # J m^4
    length: float  # m, equal to c4/c3
    c3_source: str = "computed"
    c4_source: str = "computed"

    def __post_init__(self):
        if self.c3 <= 0.0 or self.c4 <= 0.0 or self.length <= 0.0:
            raise ValueError("coefficients must be positive")
        if abs(self.length - self.c4 / self.c3) > 1e-9 * self.length:
            raise ValueError("length must equal c4/c3")

    @classmethod
    def from_c3_c4(cls, c3_value, c4_value, **tags):
        return cls(c3_value, c4_value, c4_value / c3_value, **tags)

    @classmethod
    def from_c4_length(cls, c4_value, length, **tags):
        return cls(c4_value / length, c4_value, length, **tags)


@dataclass(frozen=True)
class PhenomenologicalPotential:
    """Parameters (C4, l) of the interpolating potential -C4/(a^3 (a + l))."""

    c4: float  # J m^4
    length: float  # m

    def __post_init__(self):
        if self.c4 <= 0.0 or self.length <= 0.0:
            raise ValueError("c4 and length must be positive")

    @property
    def c3(self):
        return self.c4 / self.length


def phenomenological_energy(potential, separation):
    """Interpolating potential -C4/(a^3 (a + l)) in joules."""
    if separation <= 0.0:
        raise ValueError("separation must be positive")
    a3 = separation ** 3
    return -potential.c4 / (a3 * (separation + potential.length))


def relative_difference(e_accurate, e_phenomenological):
    """Signed relative difference (E_acc - E_ph)/E_acc."""
    if e_accurate == 0.0:
        raise ValueError("accurate energy must be nonzero")
    return (e_accurate - e_phenomenological) / e_accurate


def _frequency_scale(wall, atom):
    scale = getattr(atom, "omega0", None)
    if scale:
        return scale
    for name in ("resonance", "omega_p"):
        value = getattr(wall, name, None)
        if value:
            return value
    return 1e16


def c3(wall, atom, ideal_metal_limit=False, rel_tol=C3_EPSREL):
    """van der Waals coefficient (hbar/4 pi) int_0^inf alpha(i xi) (eps-1)/(eps+1) dxi.

    Parameters
    ----------
    wall, atom : material models.
    ideal_metal_limit : bool
        Replace (eps-1)/(eps+1) by its metallic limit 1.  Required for
        IdealMetal walls, where the coefficient is finite only through the
        decay of the polarizability.
    rel_tol : float
        Relative tolerance of the frequency quadrature.

    Returns
    -------
    float
        C3 in J m^3.
    """
    if isinstance(wall, IdealMetal) and not ideal_metal_limit:
        raise UnsupportedModelError(
            "C3 for an ideal metal requires ideal_metal_limit=True"
        )
    if ideal_metal_limit and not hasattr(atom, "omega0") and getattr(atom, "kind", "") == "static":
        raise ValueError("the ideal-metal limit diverges for a static polarizability")
    scale = _frequency_scale(wall, atom)

    def integrand(u):
        one_minus = 1.0 - u
        xi = scale * u / one_minus
        alpha = polarizability_at(atom, xi)
        if ideal_metal_limit:
            ratio = 1.0
        else:
            eps = permittivity_at(wall, xi)
            ratio = (eps - 1.0) / (eps + 1.0)
        return alpha * ratio * scale / (one_minus * one_minus)

    value, _ = quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=rel_tol, limit=200)
    return hbar / (4.0 * math.pi) * value


def c4_ideal(atom):
    """Retarded coefficient 3*hbar*c*alpha(0)/(8*pi) of an ideal wall, in J m^4."""
    return 3.0 * hbar * c * polarizability_at(atom, 0.0) / (8.0 * math.pi)


class C4Estimate(NamedTuple):
    """Extrapolated retarded coefficient and the extrapolation residual."""

    value: float  # J m^4
    residual: float  # J m^4, |difference of the two samples|


def c4_lifshitz(wall, atom, reference_separation=50e-6):
    """Retarded coefficient from the large-separation zero-temperature energy.

    Samples a^4*|E(a)| at the reference separation and at twice it, and
    removes the leading 1/a correction by Richardson extrapolation.
    """
    def sample(a):
        return a ** 4 * abs(zero_temperature_energy(a, wall, atom, method="numeric"))

    g1 = sample(reference_separation)
    g2 = sample(2.0 * reference_separation)
    return C4Estimate(2.0 * g2 - g1, abs(g2 - g1))


def rho_parameter(atom, coefficients):
    """Reflection-regime parameter sqrt(2 m)/hbar * C3/sqrt(C4), dimensionless.

    Values below 1 put quantum reflection in the nonretarded-dominated
    regime; above 1 the retarded tail dominates.
    """
    if atom.mass <= 0.0:
        raise ValueError("atom mass must be positive")
    return math.sqrt(2.0 * atom.mass) / hbar * coefficients.c3 / math.sqrt(coefficients.c4)

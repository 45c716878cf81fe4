"""Closed-form thermal factors, perturbative expansions and low-temperature
asymptotics of the atom-wall interaction.

These expressions double as fast paths and as independent oracles for the
quadrature engine: the ideal-metal/static-atom free energy, force and entropy
are exactly ``E_cp*eta``, ``F_cp*kappa`` and ``(3 k_B/2 a^3) alpha(0) sigma``
in the dimensionless temperature

    tau = 4*pi*k_B*a*T/(hbar*c).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from scipy.constants import c, hbar, k as k_B
from scipy.optimize import brentq

from .atoms import geometry_params, polarizability_at
from .errors import ValidityWarning

__all__ = [
    "ZETA_5",
    "ZETA_7",
    "tau_parameter",
    "eta",
    "eta_series",
    "kappa",
    "kappa_series",
    "sigma",
    "sigma_series",
    "sigma_zero_crossing",
    "CorrectionFactors",
    "correction_factors",
    "casimir_polder_energy",
    "casimir_polder_force",
    "perturbative_energy",
    "perturbative_force",
    "low_temperature_free_energy_correction",
    "low_temperature_force_correction",
    "low_temperature_entropy",
    "ClassicalLimits",
    "classical_limits",
]

# Series/closed-form switch points, chosen where the series remainder crosses
# double-precision noise.
_ETA_SWITCH = 1e-3
_SIGMA_SWITCH = 1e-2


def _riemann_zeta(s, cutoff=20):
    """Riemann zeta by direct summation with an Euler-Maclaurin tail."""
    partial = sum(k ** (-s) for k in range(1, cutoff))
    n = float(cutoff)
    tail = (n ** (1.0 - s) / (s - 1.0)
            + 0.5 * n ** (-s)
            + s * n ** (-s - 1.0) / 12.0
            - s * (s + 1.0) * (s + 2.0) * n ** (-s - 3.0) / 720.0)
    return partial + tail


ZETA_5 = _riemann_zeta(5.0)
ZETA_7 = _riemann_zeta(7.0)


def tau_parameter(separation, temperature):
    """Dimensionless temperature 4*pi*k_B*a*T/(hbar*c)."""
    return 4.0 * math.pi * k_B * separation * temperature / (hbar * c)


def eta_series(tau):
    """Low-temperature expansion of the free-energy factor, remainder O(tau**10)."""
    t2 = tau * tau
    t4 = t2 * t2
    return 1.0 - t4 / 2160.0 + t4 * t2 / 15120.0 - t4 * t4 / 241920.0


def eta(tau):
    """Thermal correction factor of the free energy for an ideal wall and static atom."""
    if tau < 0.0:
        raise ValueError("tau must be non-negative")
    if tau < _ETA_SWITCH:
        return eta_series(tau)
    em = math.exp(-tau)
    om = -math.expm1(-tau)  # 1 - exp(-tau)
    bracket = (
        1.0
        + 2.0 * em / om
        + 2.0 * tau * em / (om * om)
        + tau * tau * em * (1.0 + em) / (om * om * om)
    )
    return tau / 6.0 * bracket


def kappa_series(tau):
    """Low-temperature expansion of the force factor, remainder O(tau**8)."""
    t2 = tau * tau
    t6 = t2 * t2 * t2
    return 1.0 - t6 / 30240.0 - t6 * t2 / 241920.0


def kappa(tau):
    """Thermal correction factor of the force for an ideal wall and static atom."""
    if tau < 0.0:
        raise ValueError("tau must be non-negative")
    if tau < _ETA_SWITCH:
        return kappa_series(tau)
    em = math.exp(-tau)
    om = -math.expm1(-tau)
    extra = tau ** 4 * (em + 4.0 * em * em + em ** 3) / (24.0 * om ** 4)
    return 0.75 * eta(tau) + extra


def sigma_series(tau):
    """Low-temperature expansion of the entropy factor, remainder O(tau**7)."""
    t2 = tau * tau
    return -tau * t2 / 540.0 + tau * t2 * t2 / 2520.0


def sigma(tau):
    """Entropy factor: negative below the zero crossing near tau = 3, positive above."""
    if tau < 0.0:
        raise ValueError("tau must be non-negative")
    if tau == 0.0:
        return 0.0
    if tau < _SIGMA_SWITCH:
        return sigma_series(tau)
    em = math.exp(-tau)
    om = -math.expm1(-tau)
    return eta(tau) / tau - tau ** 3 * (em + 4.0 * em * em + em ** 3) / (6.0 * om ** 4)


def sigma_zero_crossing(lower=2.0, upper=4.0):
    """Location of the sign change of the entropy factor."""
    return brentq(sigma, lower, upper, xtol=1e-12, rtol=8.9e-16)


@dataclass(frozen=True)
class CorrectionFactors:
    """The three thermal factors evaluated at one tau."""

    eta: float
    kappa: float
    sigma: float
    tau: float


def correction_factors(tau):
    return CorrectionFactors(eta(tau), kappa(tau), sigma(tau), tau)


def casimir_polder_energy(separation, alpha0):
    """Fully retarded energy -3*hbar*c*alpha(0)/(8*pi*a**4) in joules."""
    return -3.0 * hbar * c * alpha0 / (8.0 * math.pi * separation ** 4)


def casimir_polder_force(separation, alpha0):
    """Fully retarded force -3*hbar*c*alpha(0)/(2*pi*a**5) in newtons."""
    return -3.0 * hbar * c * alpha0 / (2.0 * math.pi * separation ** 5)


def _expansion_window(geo):
    if geo.beta_a > 0.3 or geo.delta0_over_a > 0.3:
        warnings.warn(
            "expansion parameters beta_a=%.3g, delta0/a=%.3g exceed the "
            "validated window (< 0.3); treat the result as qualitative"
            % (geo.beta_a, geo.delta0_over_a),
            ValidityWarning,
            stacklevel=3,
        )


def perturbative_energy(separation, atom, wall):
    """Zero-temperature energy through second order in beta_a and delta0/a.

    Returns E_cp(a) times the bracket
    1 - (20/3) beta_a**2 - (8/5) delta0/a + (62/21) (delta0/a)**2.
    """
    geo = geometry_params(atom, wall, separation)
    _expansion_window(geo)
    b2 = geo.beta_a ** 2
    d = geo.delta0_over_a
    alpha0 = polarizability_at(atom, 0.0)
    bracket = 1.0 - 20.0 / 3.0 * b2 - 1.6 * d + 62.0 / 21.0 * d * d
    return casimir_polder_energy(separation, alpha0) * bracket


def perturbative_force(separation, atom, wall):
    """Zero-temperature force through second order in beta_a and delta0/a.

    Returns F_cp(a) times the bracket
    1 - 10 beta_a**2 - 2 delta0/a + (31/7) (delta0/a)**2.
    """
    geo = geometry_params(atom, wall, separation)
    _expansion_window(geo)
    b2 = geo.beta_a ** 2
    d = geo.delta0_over_a
    alpha0 = polarizability_at(atom, 0.0)
    bracket = 1.0 - 10.0 * b2 - 2.0 * d + 31.0 / 7.0 * d * d
    return casimir_polder_force(separation, alpha0) * bracket


def _low_t_window(tau):
    if tau >= 1.0:
        warnings.warn(
            "tau=%.3g is outside the low-temperature window (tau < 1)" % tau,
            ValidityWarning,
            stacklevel=3,
        )


def low_temperature_free_energy_correction(separation, temperature, atom, wall):
    """Thermal correction to the zero-temperature energy at small tau, in joules.

    Leading behaviour is +hbar*c*alpha(0)/(128*pi*a**4) * tau**4/45; skin-depth
    and dynamic-polarizability blocks enter with Riemann zeta coefficients.
    """
    tau = tau_parameter(separation, temperature)
    _low_t_window(tau)
    geo = geometry_params(atom, wall, separation)
    b2 = geo.beta_a ** 2
    d = geo.delta0_over_a
    alpha0 = polarizability_at(atom, 0.0)
    t2 = tau * tau
    pi4 = math.pi ** 4
    pi6 = math.pi ** 6
    brace = (
        1.0 / 45.0
        - t2 / 315.0 * (1.0 - 10.0 / 3.0 * b2)
        + t2 * t2 / 5040.0 * (1.0 - 16.8 * b2 + 56.0 * b2 * b2)
        - tau * d * (3.0 * ZETA_5 / pi4 + b2 * t2 * 45.0 * ZETA_7 / (2.0 * pi6) - tau * t2 / 1350.0)
        - t2 * d * d * (5.0 / 189.0 - 45.0 * ZETA_7 / (4.0 * pi6) * tau + (1.0 + 50.0 * b2) * t2 / 1800.0)
    )
    return hbar * c * alpha0 / (128.0 * math.pi * separation ** 4) * tau ** 4 * brace


def low_temperature_force_correction(separation, temperature, atom, wall):
    """Thermal correction to the zero-temperature force at small tau, in newtons.

    Obtained as the negative separation derivative of the free-energy
    correction; the terms proportional to tau*delta0/a, tau*beta_a and
    tau**2*delta0**2*beta_a**2/a**2 are separation-independent and drop out.
    """
    tau = tau_parameter(separation, temperature)
    _low_t_window(tau)
    geo = geometry_params(atom, wall, separation)
    b2 = geo.beta_a ** 2
    d = geo.delta0_over_a
    alpha0 = polarizability_at(atom, 0.0)
    t2 = tau * tau
    pi6 = math.pi ** 6
    brace = (
        2.0 / 315.0
        - t2 / 30.0 * (1.0 / 42.0 - b2 / 5.0)
        - t2 * d / 450.0
        - tau * d * d * (45.0 * ZETA_7 / (4.0 * pi6) - tau / 900.0)
    )
    return hbar * c * alpha0 / (128.0 * math.pi * separation ** 5) * tau ** 6 * brace


def low_temperature_entropy(separation, temperature, atom, wall):
    """Entropy at small tau in J/K; negative throughout its validity window."""
    tau = tau_parameter(separation, temperature)
    _low_t_window(tau)
    geo = geometry_params(atom, wall, separation)
    b2 = geo.beta_a ** 2
    d = geo.delta0_over_a
    alpha0 = polarizability_at(atom, 0.0)
    t2 = tau * tau
    brace = (
        4.0 / 45.0
        - 2.0 * t2 / 105.0 * (1.0 - 10.0 / 3.0 * b2)
        - tau * d * 15.0 * ZETA_5 / math.pi ** 4
        - 10.0 / 63.0 * t2 * d * d
    )
    return -k_B * alpha0 / (32.0 * separation ** 3) * tau ** 3 * brace


class ClassicalLimits(NamedTuple):
    """High-temperature (tau >> 1) limits of free energy, force and entropy."""

    free_energy: float
    force: float
    entropy: float


def classical_limits(separation, temperature, atom):
    """Classical limits, valid for any wall of a metallic kind.

    The free energy -k_B*T*alpha(0)/(4*a**3) is linear in temperature; its
    negative temperature derivative makes the entropy the positive constant
    +k_B*alpha(0)/(4*a**3), independent of T.
    """
    tau = tau_parameter(separation, temperature)
    if tau < 10.0:
        warnings.warn(
            "tau=%.3g below the classical window (tau >= 10)" % tau,
            ValidityWarning,
            stacklevel=2,
        )
    alpha0 = polarizability_at(atom, 0.0)
    a3 = separation ** 3
    return ClassicalLimits(
        -k_B * temperature * alpha0 / (4.0 * a3),
        -3.0 * k_B * temperature * alpha0 / (4.0 * a3 * separation),
        k_B * alpha0 / (4.0 * a3),
    )

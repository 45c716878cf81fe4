"""Finite-temperature Matsubara sums and the zero-temperature double integral.

The free energy of a ground-state atom at separation ``a`` from a wall at
temperature ``T`` is evaluated as the primed sum

    F(a,T) = -(k_B T / 8 a^3) * sum_l' alpha(i zeta_l omega_c)
             * int_{zeta_l}^inf dy e^{-y} {2 y^2 r_TM - zeta_l^2 [r_TM + r_TE]}

in the dimensionless variables zeta_l = tau*l, y = 2*a*q, with the l = 0 term
carrying weight 1/2.  The force carries an extra factor y in the integrand
and one more power of 1/a in front.  At T = 0 the sum becomes a double
integral handled by ``zero_temperature_energy``.

Matsubara terms are independent; they are accumulated here sequentially in
ascending l so results are bit-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.constants import c, hbar, k as k_B
from scipy.integrate import quad

from . import asymptotics
from .atoms import StaticAtom, polarizability_at
from .errors import ConvergenceError
from .materials import IdealMetal

__all__ = [
    "Scene",
    "InteractionResult",
    "free_energy",
    "force",
    "entropy",
    "zero_temperature_energy",
    "matsubara_term",
    "interaction",
]

# Integration window above the lower limit; the e^{-y} decay makes the
# remainder negligible and a certified tail bound is added to the error
# estimate anyway.
Y_SPAN = 60.0
# Per-term quadrature tolerance, kept well below the documented 1e-9 budget
# so that summed errors stay within it.
QUAD_EPSREL = 1e-11
# Tolerance of the outer integral of the zero-temperature energy.
ZERO_T_EPSREL = 1e-8
# Matsubara truncation: stop after terms fall below this relative size for
# three consecutive l.
SUM_REL_STOP = 1e-12
_SUM_CONSECUTIVE = 3


@dataclass(frozen=True)
class Scene:
    """Separation and temperature with the derived dimensionless state."""

    separation: float  # m
    temperature: float  # K

    def __post_init__(self):
        if self.separation <= 0.0:
            raise ValueError("separation must be positive")
        if self.temperature < 0.0:
            raise ValueError("temperature must be non-negative")

    @property
    def omega_c(self):
        """Characteristic frequency c/(2*a) in rad/s."""
        return c / (2.0 * self.separation)

    @property
    def effective_temperature(self):
        """Characteristic temperature hbar*omega_c/k_B in kelvin."""
        return hbar * self.omega_c / k_B

    @property
    def tau(self):
        """Dimensionless temperature 4*pi*k_B*a*T/(hbar*c) = 2*pi*T/T_eff."""
        return 4.0 * math.pi * k_B * self.separation * self.temperature / (hbar * c)

    def matsubara_frequency(self, l):
        """l-th Matsubara frequency 2*pi*k_B*T*l/hbar in rad/s."""
        return 2.0 * math.pi * k_B * self.temperature * l / hbar

    def zeta(self, l):
        """Dimensionless Matsubara frequency tau*l."""
        return self.tau * l

    @classmethod
    def from_tau(cls, separation, tau):
        """Scene at the temperature corresponding to a given tau."""
        temperature = tau * hbar * c / (4.0 * math.pi * k_B * separation)
        return cls(separation, temperature)


@dataclass(frozen=True)
class InteractionResult:
    """Free energy, force and entropy with convergence diagnostics."""

    free_energy: float  # J
    force: float  # N
    entropy: float  # J/K
    l_max: int
    quadrature_error: float  # J, summed over terms, tail bounds included
    truncation_error: float  # J, bound on the discarded Matsubara tail
    force_gradient_residual: float  # relative |F + dF/da| cross-check
    entropy_stencil: tuple  # free energies used by the entropy stencil


def _quad(f, lower, upper, epsrel=QUAD_EPSREL):
    out = quad(f, lower, upper, epsabs=0.0, epsrel=epsrel, limit=200, full_output=1)
    value, abserr = out[0], out[1]
    if len(out) > 3 and abserr > 100.0 * epsrel * abs(value) + 1e-300:
        raise ConvergenceError(f"quadrature did not converge: {out[3]}", abserr)
    return value, abserr


def _kernel_factory(wall, zeta, omega_c, moment):
    """Integrand e^{-y} (2 y^2 r_TM - zeta^2 (r_TM + r_TE)) y^moment.

    The permittivity depends on zeta only, so it is evaluated once per term.
    The zeta = 0 branch uses the model's analytic zero-frequency limit; the
    TE amplitude never appears there because its prefactor zeta^2 vanishes.
    """
    if zeta == 0.0:
        def integrand(y, _wall=wall, _oc=omega_c, _m=moment):
            r_tm = _wall.zero_frequency_reflection(y, _oc)[0]
            value = 2.0 * y * y * r_tm * math.exp(-y)
            return value if _m == 0 else value * y

        return integrand
    if isinstance(wall, IdealMetal):
        # r_TM = 1 and r_TM + r_TE = 0 identically.
        def integrand(y, _m=moment):
            value = 2.0 * y * y * math.exp(-y)
            return value if _m == 0 else value * y

        return integrand
    eps = wall.permittivity(omega_c * zeta)
    gap = zeta * zeta * (eps - 1.0)
    zeta2 = zeta * zeta

    def integrand(y, _eps=eps, _gap=gap, _z2=zeta2, _m=moment):
        k = math.sqrt(y * y + _gap)
        r_tm = (_eps * y - k) / (_eps * y + k)
        r_te = (y - k) / (y + k)
        value = math.exp(-y) * (2.0 * y * y * r_tm - _z2 * (r_tm + r_te))
        return value if _m == 0 else value * y

    return integrand


def _tail_bound(lower, moment):
    """Bound on the integrand mass discarded beyond lower + Y_SPAN.

    Uses |2 y^2 r_TM - zeta^2 (r_TM + r_TE)| <= 3 y^2 for y >= zeta.
    """
    y = lower + Y_SPAN
    decay = math.exp(-y)
    if moment == 0:
        poly = y * y + 2.0 * y + 2.0
    else:
        poly = y * (y * y + 3.0 * y + 6.0) + 6.0
    return 3.0 * decay * poly


def _matsubara_sum(scene, wall, atom, moment):
    """Primed Matsubara sum; moment 0 gives the free energy, 1 the force.

    Returns (value, l_max, quadrature_error, truncation_error) in SI units.
    """
    if scene.temperature <= 0.0:
        raise ValueError("the Matsubara sum needs T > 0; use zero_temperature_energy at T = 0")
    tau = scene.tau
    omega_c = scene.omega_c
    prefactor = -k_B * scene.temperature / (8.0 * scene.separation ** (3 + moment))
    cap = max(100000, int(math.ceil(200.0 / tau)))
    total = 0.0
    quad_error = 0.0
    below = 0
    term = 0.0
    l = 0
    while True:
        zeta = tau * l
        alpha = polarizability_at(atom, omega_c * zeta)
        weight = 0.5 if l == 0 else 1.0
        if alpha != 0.0:
            integrand = _kernel_factory(wall, zeta, omega_c, moment)
            value, err = _quad(integrand, zeta, zeta + Y_SPAN)
            term = weight * alpha * value
            quad_error += weight * alpha * (err + _tail_bound(zeta, moment))
        else:
            term = 0.0
        total += term
        if l > 0:
            below = below + 1 if abs(term) <= SUM_REL_STOP * abs(total) else 0
            if below >= _SUM_CONSECUTIVE:
                break
        if l >= cap:
            raise ConvergenceError(
                f"Matsubara sum not converged within l = {cap}", abs(term)
            )
        l += 1
    decay = math.exp(-tau)
    truncation = abs(term) * decay / (1.0 - decay)
    scale = abs(prefactor)
    return prefactor * total, l, scale * quad_error, scale * truncation


def _routed(wall, atom, method):
    return method == "auto" and isinstance(wall, IdealMetal) and isinstance(atom, StaticAtom)


def free_energy(scene, wall, atom, method="auto"):
    """Free energy of the atom-wall interaction in joules.

    Parameters
    ----------
    scene : Scene
        Separation and temperature (T > 0).
    wall, atom : wall and atom models.
    method : {"auto", "numeric"}
        "auto" routes the ideal-metal/static-atom combination to its exact
        closed form; "numeric" always evaluates the Matsubara sum.

    Returns
    -------
    float
        Negative for every attractive configuration handled here.
    """
    if _routed(wall, atom, method):
        return asymptotics.casimir_polder_energy(scene.separation, atom.alpha0) * asymptotics.eta(scene.tau)
    value, _, _, _ = _matsubara_sum(scene, wall, atom, 0)
    return value


def force(scene, wall, atom, method="auto"):
    """Force on the atom in newtons (negative: attraction towards the wall)."""
    if _routed(wall, atom, method):
        return asymptotics.casimir_polder_force(scene.separation, atom.alpha0) * asymptotics.kappa(scene.tau)
    value, _, _, _ = _matsubara_sum(scene, wall, atom, 1)
    return value


def matsubara_term(scene, wall, atom, l):
    """Single primed-sum term of the free energy in joules (1/2 weight at l = 0)."""
    if not isinstance(l, (int,)) or l < 0:
        raise ValueError("l must be a non-negative integer")
    if scene.temperature <= 0.0:
        raise ValueError("Matsubara terms need T > 0")
    zeta = scene.tau * l
    omega_c = scene.omega_c
    alpha = polarizability_at(atom, omega_c * zeta)
    integrand = _kernel_factory(wall, zeta, omega_c, 0)
    value, _ = _quad(integrand, zeta, zeta + Y_SPAN)
    weight = 0.5 if l == 0 else 1.0
    return -k_B * scene.temperature / (8.0 * scene.separation ** 3) * weight * alpha * value


def _entropy_step(temperature):
    step = max(1e-3 * temperature, 1e-3)
    if step >= temperature:
        step = 0.5 * temperature
    return step


def entropy(scene, wall, atom, method="auto"):
    """Entropy S = -dF/dT in J/K by Richardson-extrapolated central differences.

    The stencil step is max(1e-3*T, 1e-3 K), halved once for the
    extrapolation.  The ideal-metal/static-atom combination routes to the
    closed form under method="auto".
    """
    if scene.temperature <= 0.0:
        raise ValueError("entropy needs T > 0")
    if _routed(wall, atom, method):
        alpha0 = atom.alpha0
        return 1.5 * k_B * alpha0 / scene.separation ** 3 * asymptotics.sigma(scene.tau)
    value, _ = _entropy_with_stencil(scene, wall, atom, method)
    return value


def _entropy_with_stencil(scene, wall, atom, method):
    temperature = scene.temperature
    step = _entropy_step(temperature)

    def fe(t):
        return free_energy(Scene(scene.separation, t), wall, atom, method=method)

    stencil = (fe(temperature - step), fe(temperature + step),
               fe(temperature - 0.5 * step), fe(temperature + 0.5 * step))
    coarse = (stencil[0] - stencil[1]) / (2.0 * step)
    fine = (stencil[2] - stencil[3]) / step
    return (4.0 * fine - coarse) / 3.0, stencil


def zero_temperature_energy(separation, wall, atom, method="auto"):
    """Zero-temperature interaction energy in joules.

    Evaluates the double integral

        E(a) = (hbar c / 32 pi a^4) * int_0^inf dzeta int_zeta^inf dy h(zeta, y)

    by iterated adaptive quadrature; the outer variable is mapped to the unit
    interval through zeta = u/(1-u).  Outer relative tolerance 1e-8, inner
    1e-10.
    """
    if separation <= 0.0:
        raise ValueError("separation must be positive")
    if _routed(wall, atom, method):
        return asymptotics.casimir_polder_energy(separation, atom.alpha0)
    omega_c = c / (2.0 * separation)

    def outer(u):
        one_minus = 1.0 - u
        zeta = u / one_minus
        alpha = polarizability_at(atom, omega_c * zeta)
        if alpha == 0.0:
            return 0.0
        integrand = _kernel_factory(wall, zeta, omega_c, 0)
        value, _ = _quad(integrand, zeta, zeta + Y_SPAN, epsrel=1e-10)
        return alpha * value / (one_minus * one_minus)

    total, _ = _quad(outer, 0.0, 1.0, epsrel=ZERO_T_EPSREL)
    return -hbar * c / (32.0 * math.pi * separation ** 4) * total


def interaction(scene, wall, atom):
    """Free energy, force and entropy with diagnostics, fully numeric.

    The force diagnostic cross-checks the Matsubara-sum force against the
    central finite difference -dF/da with step 1e-4*a.
    """
    fe, l_max, quad_err_e, trunc_e = _matsubara_sum(scene, wall, atom, 0)
    fo, _, _, _ = _matsubara_sum(scene, wall, atom, 1)
    s, stencil = _entropy_with_stencil(scene, wall, atom, "numeric")
    step = 1e-4 * scene.separation
    fe_plus, _, _, _ = _matsubara_sum(Scene(scene.separation + step, scene.temperature), wall, atom, 0)
    fe_minus, _, _, _ = _matsubara_sum(Scene(scene.separation - step, scene.temperature), wall, atom, 0)
    gradient = -(fe_plus - fe_minus) / (2.0 * step)
    residual = abs(fo - gradient) / abs(fo)
    return InteractionResult(
        free_energy=fe,
        force=fo,
        entropy=s,
        l_max=l_max,
        quadrature_error=quad_err_e,
        truncation_error=trunc_e,
        force_gradient_residual=residual,
        entropy_stencil=stencil,
    )

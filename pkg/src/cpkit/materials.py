"""Wall permittivity models and Fresnel reflection at imaginary frequencies.

Every model evaluates the dielectric permittivity eps(i*xi) on the imaginary
frequency axis, where it is real and >= 1, and supplies the zero-frequency
reflection limit analytically.  Zero frequency is always a dedicated code
path, never a numerical limit of the finite-frequency formulas.

All models are immutable and all operations are pure functions, safe for
concurrent evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np
from scipy.constants import c

from .errors import TableError, UnsupportedModelError, ZeroFrequencyError

__all__ = [
    "ReflectionPair",
    "IdealMetal",
    "PlasmaMetal",
    "DrudeMetal",
    "DielectricOscillator",
    "OpticalTable",
    "TabulatedWall",
    "kramers_kronig",
    "static_permittivity",
    "permittivity_at",
    "reflection",
]

# Relative tolerance of the dispersion-transform quadrature.
KK_REL_TOL = 1e-6


class ReflectionPair(NamedTuple):
    """TM and TE reflection amplitudes at one (zeta, y) point."""

    r_tm: float
    r_te: float


def _fresnel(eps, zeta, y):
    k = math.sqrt(y * y + zeta * zeta * (eps - 1.0))
    return ReflectionPair((eps * y - k) / (eps * y + k), (y - k) / (y + k))


@dataclass(frozen=True)
class IdealMetal:
    """Perfect reflector: r_TM = 1 and r_TE = -1 at every frequency."""

    kind = "ideal"

    def permittivity(self, xi):
        raise UnsupportedModelError(
            "an ideal metal has no finite permittivity; only reflection "
            "coefficients are defined"
        )

    def zero_frequency_reflection(self, y, omega_c):
        return ReflectionPair(1.0, -1.0)

    @property
    def plasma_wavelength(self):
        # Zero penetration depth.
        return 0.0


@dataclass(frozen=True)
class PlasmaMetal:
    """Collisionless free-electron wall, eps(i*xi) = 1 + (omega_p/xi)**2."""

    omega_p: float  # rad/s

    kind = "plasma"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise ValueError("omega_p must be positive")

    def permittivity(self, xi):
        if xi == 0.0:
            raise ZeroFrequencyError(
                "plasma permittivity diverges at xi = 0; use the "
                "zero-frequency reflection path"
            )
        r = self.omega_p / xi
        return 1.0 + r * r

    def zero_frequency_reflection(self, y, omega_c):
        # eps*zeta**2 tends to (omega_p/omega_c)**2 > 0, so eps*y dominates
        # and r_TM -> 1, while r_TE keeps a finite y-dependent limit.  The
        # TE value is returned for completeness only: it enters the
        # summations multiplied by zeta_0**2 = 0 and never contributes.
        w = self.omega_p / omega_c
        k = math.hypot(y, w)
        return ReflectionPair(1.0, (y - k) / (y + k))

    @property
    def plasma_wavelength(self):
        return 2.0 * math.pi * c / self.omega_p


@dataclass(frozen=True)
class DrudeMetal:
    """Free-electron wall with relaxation, eps(i*xi) = 1 + omega_p**2/(xi*(xi+gamma))."""

    omega_p: float  # rad/s
    gamma: float  # rad/s

    kind = "drude"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise ValueError("omega_p must be positive")
        if self.gamma <= 0.0:
            raise ValueError("gamma must be positive")

    def permittivity(self, xi):
        if xi == 0.0:
            raise ZeroFrequencyError(
                "Drude permittivity diverges at xi = 0; use the "
                "zero-frequency reflection path"
            )
        return 1.0 + self.omega_p ** 2 / (xi * (xi + self.gamma))

    def zero_frequency_reflection(self, y, omega_c):
        # zeta**2*(eps - 1) -> 0 while eps -> inf, hence r_TM -> 1 and
        # r_TE -> 0 (returned but never contributing, see PlasmaMetal).
        return ReflectionPair(1.0, 0.0)

    @property
    def plasma_wavelength(self):
        return 2.0 * math.pi * c / self.omega_p


@dataclass(frozen=True)
class DielectricOscillator:
    """Single-resonance dielectric, eps(i*xi) = 1 + (eps0 - 1)/(1 + (xi/omega)**2).

    A deliberately coarse stand-in for walls whose tabulated optical data are
    not available; suitable for qualitative runs only.
    """

    eps_static: float
    resonance: float  # rad/s

    kind = "oscillator"

    def __post_init__(self):
        if self.eps_static <= 1.0:
            raise ValueError("eps_static must exceed 1")
        if self.resonance <= 0.0:
            raise ValueError("resonance must be positive")

    def permittivity(self, xi):
        r = xi / self.resonance
        return 1.0 + (self.eps_static - 1.0) / (1.0 + r * r)

    def zero_frequency_reflection(self, y, omega_c):
        e0 = self.eps_static
        return ReflectionPair((e0 - 1.0) / (e0 + 1.0), 0.0)


@dataclass(frozen=True)
class OpticalTable:
    """Tabulated absorption spectrum Im eps(omega) on a strictly increasing grid."""

    omega: np.ndarray  # rad/s
    im_eps: np.ndarray  # dimensionless

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        im_eps = np.asarray(self.im_eps, dtype=float)
        if omega.ndim != 1 or omega.shape != im_eps.shape:
            raise TableError("omega and im_eps must be 1-d arrays of equal length")
        if omega.size < 2:
            raise TableError("an optical table needs at least 2 rows")
        if not np.all(np.isfinite(omega)) or not np.all(np.isfinite(im_eps)):
            raise TableError("optical table entries must be finite")
        if omega[0] <= 0.0 or np.any(np.diff(omega) <= 0.0):
            raise TableError("frequencies must be positive and strictly increasing")
        if np.any(im_eps < 0.0):
            raise TableError("Im eps must be non-negative")
        omega.setflags(write=False)
        im_eps.setflags(write=False)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "im_eps", im_eps)

    @classmethod
    def from_file(cls, path):
        """Read a two-column table (omega_rad_s, im_eps); '#' starts a comment."""
        data = np.loadtxt(path, comments="#", ndmin=2)
        if data.shape[1] != 2:
            raise TableError(f"{path}: expected two columns, got {data.shape[1]}")
        return cls(data[:, 0], data[:, 1])


def _segment(w0, i0, w1, i1, xi, rel_tol):
    """Transform kernel integrated over one table segment.

    Im eps is interpolated log-linearly (power law) between the endpoints,
    falling back to linear interpolation when an endpoint vanishes.  The
    kernel factor omega/(omega**2 + xi**2) is integrated analytically on
    geometrically refined sub-intervals until the segment value is stable
    to rel_tol.
    """
    if i0 == 0.0 and i1 == 0.0:
        return 0.0
    power_law = i0 > 0.0 and i1 > 0.0
    if power_law:
        p = math.log(i1 / i0) / math.log(w1 / w0)
    xi2 = xi * xi
    previous = None
    n = 4
    while True:
        edges = np.geomspace(w0, w1, n + 1)
        mids = np.sqrt(edges[:-1] * edges[1:])
        if power_law:
            values = i0 * (mids / w0) ** p
        else:
            values = i0 + (i1 - i0) * (mids - w0) / (w1 - w0)
        pieces = values * 0.5 * np.log((edges[1:] ** 2 + xi2) / (edges[:-1] ** 2 + xi2))
        total = float(pieces.sum())
        if previous is not None and abs(total - previous) <= rel_tol * max(abs(total), 1e-300):
            return total
        if n >= 4096:
            return total
        previous = total
        n *= 2


def _low_tail(table, xi):
    """Free-carrier continuation below the lowest tabulated frequency.

    Fits Im eps = K/(omega*(omega**2 + gamma**2)) to the two lowest rows and
    integrates the kernel analytically on (0, omega_min].  Falls back to a
    pure 1/omega tail when the fit is degenerate.
    """
    w1, i1 = float(table.omega[0]), float(table.im_eps[0])
    w2, i2 = float(table.omega[1]), float(table.im_eps[1])
    if i1 <= 0.0:
        return 0.0
    if i2 > 0.0:
        num = i2 * w2 ** 3 - i1 * w1 ** 3
        den = i1 * w1 - i2 * w2
        if num > 0.0 and den > 0.0:
            g2 = num / den
            g = math.sqrt(g2)
            big_k = i1 * w1 * (w1 * w1 + g2)
            xi2 = xi * xi
            if abs(xi2 - g2) > 1e-9 * (xi2 + g2):
                return big_k / (xi2 - g2) * (math.atan(w1 / g) / g - math.atan(w1 / xi) / xi)
            # Degenerate xi ~ gamma: int dw/(w^2+g^2)^2 in closed form.
            return big_k * (w1 / (2.0 * g2 * (w1 * w1 + g2)) + math.atan(w1 / g) / (2.0 * g * g2))
    a = i1 * w1
    return a * math.atan(w1 / xi) / xi


def _high_tail(table, xi, rel_tol):
    """Power-law continuation above the highest tabulated frequency.

    Continues the last log-linear slope when it is integrable against the
    kernel; otherwise the table is truncated and the tail contributes zero.
    """
    w_n, i_n = float(table.omega[-1]), float(table.im_eps[-1])
    w_m, i_m = float(table.omega[-2]), float(table.im_eps[-2])
    if i_n <= 0.0:
        return 0.0
    if i_m > 0.0:
        p = math.log(i_n / i_m) / math.log(w_n / w_m)
    else:
        p = -3.0
    if p >= -1.0:
        return 0.0
    total = 0.0
    a = w_n
    for _ in range(200):
        b = 2.0 * a
        ia = i_n * (a / w_n) ** p
        ib = i_n * (b / w_n) ** p
        piece = _segment(a, ia, b, ib, xi, rel_tol)
        total += piece
        if piece <= rel_tol * max(total, 1e-300):
            break
        a = b
    return total


def kramers_kronig(table, xi, rel_tol=KK_REL_TOL, low_tail="none"):
    """Permittivity on the imaginary axis from tabulated absorption data.

    Evaluates

        eps(i*xi) = 1 + (2/pi) * int_0^inf omega*Im eps(omega)/(omega**2 + xi**2) domega

    with Im eps interpolated log-linearly between table rows and the kernel
    integrated analytically on refined sub-intervals.

    Parameters
    ----------
    table : OpticalTable
        Validated absorption data.
    xi : float
        Imaginary frequency in rad/s, positive.
    rel_tol : float
        Relative tolerance of the segment refinement.
    low_tail : {"none", "drude"}
        Continuation below the lowest tabulated frequency: "none" assumes no
        absorption there (dielectrics), "drude" fits a free-carrier tail to
        the two lowest rows (metals).

    Returns
    -------
    float
        eps(i*xi), always >= 1.
    """
    if xi <= 0.0:
        raise ValueError("xi must be positive")
    if low_tail not in ("none", "drude"):
        raise ValueError("low_tail must be 'none' or 'drude'")
    omega = table.omega
    im_eps = table.im_eps
    total = 0.0
    for j in range(omega.size - 1):
        total += _segment(omega[j], im_eps[j], omega[j + 1], im_eps[j + 1], xi, rel_tol)
    if low_tail == "drude":
        total += _low_tail(table, xi)
    total += _high_tail(table, xi, rel_tol)
    return 1.0 + (2.0 / math.pi) * total


def static_permittivity(table, rel_tol=KK_REL_TOL):
    """Zero-frequency permittivity 1 + (2/pi) int Im eps(omega)/omega domega.

    Only meaningful for dielectric tables (no free-carrier tail); metals have
    a divergent static permittivity.
    """
    omega = table.omega
    im_eps = table.im_eps
    total = 0.0
    for j in range(omega.size - 1):
        w0, i0 = float(omega[j]), float(im_eps[j])
        w1, i1 = float(omega[j + 1]), float(im_eps[j + 1])
        if i0 == 0.0 and i1 == 0.0:
            continue
        power_law = i0 > 0.0 and i1 > 0.0
        if power_law:
            p = math.log(i1 / i0) / math.log(w1 / w0)
        previous = None
        n = 4
        while True:
            edges = np.geomspace(w0, w1, n + 1)
            mids = np.sqrt(edges[:-1] * edges[1:])
            if power_law:
                values = i0 * (mids / w0) ** p
            else:
                values = i0 + (i1 - i0) * (mids - w0) / (w1 - w0)
            part = float((values * np.log(edges[1:] / edges[:-1])).sum())
            if previous is not None and abs(part - previous) <= rel_tol * max(abs(part), 1e-300):
                break
            if n >= 4096:
                break
            previous = part
            n *= 2
        total += part
    # Integrable high-frequency continuation of the last slope.
    w_n, i_n = float(omega[-1]), float(im_eps[-1])
    i_m = float(im_eps[-2])
    if i_n > 0.0:
        p = math.log(i_n / i_m) / math.log(w_n / float(omega[-2])) if i_m > 0.0 else -3.0
        if p < 0.0:
            total += -i_n / p
    return 1.0 + (2.0 / math.pi) * total


@dataclass(frozen=True)
class TabulatedWall:
    """Wall described by tabulated absorption data via the dispersion transform.

    ``metal=True`` selects the free-carrier low-frequency continuation and the
    metallic zero-frequency reflection limit.  Each permittivity call performs
    the full transform; precompute on a grid before embedding this model in
    large summations.
    """

    table: OpticalTable
    metal: bool = False
    rel_tol: float = KK_REL_TOL

    kind = "tabulated"

    def permittivity(self, xi):
        if xi == 0.0:
            if self.metal:
                raise ZeroFrequencyError(
                    "metallic tabulated permittivity diverges at xi = 0; "
                    "use the zero-frequency reflection path"
                )
            return self.eps_static
        return kramers_kronig(self.table, xi, self.rel_tol, "drude" if self.metal else "none")

    @cached_property
    def eps_static(self):
        if self.metal:
            return math.inf
        return static_permittivity(self.table, self.rel_tol)

    def zero_frequency_reflection(self, y, omega_c):
        if self.metal:
            return ReflectionPair(1.0, 0.0)
        e0 = self.eps_static
        return ReflectionPair((e0 - 1.0) / (e0 + 1.0), 0.0)


def permittivity_at(model, xi):
    """Dielectric permittivity eps(i*xi) of a wall model, xi in rad/s >= 0."""
    if xi < 0.0:
        raise ValueError("xi must be non-negative")
    return model.permittivity(xi)


def reflection(model, zeta, y, omega_c):
    """TM/TE reflection amplitudes at dimensionless (zeta, y).

    Parameters
    ----------
    model : wall model
    zeta : float
        Imaginary frequency in units of the characteristic frequency,
        zeta = xi/omega_c, >= 0.
    y : float
        Dimensionless radial variable y = 2*a*q, >= zeta.
    omega_c : float
        Characteristic frequency c/(2*a) in rad/s, used to evaluate the
        permittivity at xi = omega_c*zeta.

    Returns
    -------
    ReflectionPair
        r_TM in [0, 1] and r_TE in [-1, 0].  At zeta = 0 the model's
        analytic limit is returned; its TE component never contributes to
        observables because it is multiplied by zeta**2 = 0.
    """
    if zeta < 0.0:
        raise ValueError("zeta must be non-negative")
    if y < zeta:
        raise ValueError("y must satisfy y >= zeta")
    if omega_c <= 0.0:
        raise ValueError("omega_c must be positive")
    if zeta == 0.0:
        return model.zero_frequency_reflection(y, omega_c)
    if isinstance(model, IdealMetal):
        return ReflectionPair(1.0, -1.0)
    eps = model.permittivity(omega_c * zeta)
    return _fresnel(eps, zeta, y)

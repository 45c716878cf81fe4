import math

import numpy as np
import pytest
from scipy.constants import c

from cpkit import (
    IdealMetal,
    OscillatorAtom,
    PlasmaMetal,
    StaticAtom,
    TabulatedAtom,
    geometry_params,
    polarizability_at,
)
from cpkit.units import AU_POLARIZABILITY, ev_to_rad_s

HELIUM = OscillatorAtom(alpha0=315.63 * AU_POLARIZABILITY, omega0=ev_to_rad_s(1.18))
GOLD = PlasmaMetal(omega_p=ev_to_rad_s(9.0))


def test_static_value_in_si():
    # 315.63 a.u. with the volume convention 1 a.u. = 1.482e-31 m^3.
    assert polarizability_at(HELIUM, 0.0) == pytest.approx(4.678e-29, rel=1e-3)


def test_oscillator_half_and_fifth():
    w0 = HELIUM.omega0
    assert polarizability_at(HELIUM, w0) == pytest.approx(HELIUM.alpha0 / 2.0, rel=1e-14)
    assert polarizability_at(HELIUM, 2.0 * w0) == pytest.approx(HELIUM.alpha0 / 5.0, rel=1e-14)


def test_oscillator_identity():
    for xi in np.geomspace(1e12, 1e17, 12):
        value = polarizability_at(HELIUM, xi)
        assert value * (1.0 + (xi / HELIUM.omega0) ** 2) == pytest.approx(HELIUM.alpha0, rel=1e-13)


def test_static_atom_is_flat():
    atom = StaticAtom(alpha0=1e-29)
    assert polarizability_at(atom, 0.0) == polarizability_at(atom, 1e17) == 1e-29


def test_negative_frequency_rejected():
    with pytest.raises(ValueError):
        polarizability_at(HELIUM, -1.0)


def test_monotone_non_increasing():
    grid = np.geomspace(1e11, 1e18, 50)
    values = [polarizability_at(HELIUM, xi) for xi in grid]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_tabulated_matches_closed_form_and_tails():
    grid = np.geomspace(HELIUM.omega0 / 100.0, HELIUM.omega0 * 100.0, 400)
    atom = TabulatedAtom(grid, [HELIUM.polarizability(x) for x in grid])
    for xi in np.geomspace(HELIUM.omega0 / 50.0, HELIUM.omega0 * 50.0, 21):
        assert polarizability_at(atom, xi) == pytest.approx(HELIUM.polarizability(xi), rel=1e-3)
    # below the grid: clamp to the lowest tabulated value
    assert polarizability_at(atom, 0.0) == atom.alpha[0]
    # above the grid: inverse-square continuation
    far = HELIUM.omega0 * 1e4
    expected = atom.alpha[-1] * (grid[-1] / far) ** 2
    assert polarizability_at(atom, far) == pytest.approx(expected, rel=1e-14)


# ------------------------------------------------------------------- geometry

def test_helium_beta_at_one_micron():
    geo = geometry_params(HELIUM, GOLD, 1e-6)
    lam0 = 2.0 * math.pi * c / HELIUM.omega0
    assert lam0 == pytest.approx(1.0507e-6, rel=1e-3)
    assert geo.beta_a == pytest.approx(0.0836, rel=2e-3)
    # cross-check of the quadratic correction it drives
    assert -20.0 / 3.0 * geo.beta_a ** 2 == pytest.approx(-0.046, abs=1e-3)


def test_gold_skin_parameter_at_one_micron():
    geo = geometry_params(HELIUM, GOLD, 1e-6)
    assert GOLD.plasma_wavelength == pytest.approx(137e-9, rel=7e-3)
    assert geo.delta0_over_a == pytest.approx(0.0218, rel=7e-3)
    assert -1.6 * geo.delta0_over_a == pytest.approx(-0.034, abs=1.2e-3)


def test_geometry_scaling_and_limits():
    geo1 = geometry_params(HELIUM, GOLD, 1e-6)
    geo2 = geometry_params(HELIUM, GOLD, 2e-6)
    assert geo2.beta_a == pytest.approx(geo1.beta_a / 2.0, rel=1e-14)
    assert geo2.delta0_over_a == pytest.approx(geo1.delta0_over_a / 2.0, rel=1e-14)
    far = geometry_params(HELIUM, GOLD, 1.0)
    assert far.beta_a < 1e-6 and far.delta0_over_a < 1e-6


def test_ideal_metal_has_zero_skin_depth():
    geo = geometry_params(HELIUM, IdealMetal(), 1e-6)
    assert geo.delta0_over_a == 0.0


def test_static_atom_has_zero_beta():
    geo = geometry_params(StaticAtom(alpha0=1e-29), GOLD, 1e-6)
    assert geo.beta_a == 0.0

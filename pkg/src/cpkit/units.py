"""Unit conversions used at the configuration boundary.

Everything inside the library is SI: metres, kelvin, joules, rad/s for
angular frequencies and m^3 for polarizabilities.  Electronvolts, atomic
units and nanometre-based coefficient units are accepted in configuration
files and converted once at ingestion.
"""

from scipy.constants import atomic_mass, c, e as elementary_charge, hbar, k as k_B  # noqa: F401

# One atomic unit of polarizability expressed as a volume (volume convention).
AU_POLARIZABILITY = 1.482e-31  # m^3

# eV nm^4 -> J m^4 and eV nm^3 -> J m^3
EV_NM4 = elementary_charge * 1e-36
EV_NM3 = elementary_charge * 1e-27


def ev_to_rad_s(energy_ev):
    """Photon energy in eV to angular frequency in rad/s."""
    return energy_ev * elementary_charge / hbar


def rad_s_to_ev(omega):
    """Angular frequency in rad/s to photon energy in eV."""
    return omega * hbar / elementary_charge


def j_m4_to_ev_nm4(value):
    return value / EV_NM4


def j_m3_to_ev_nm3(value):
    return value / EV_NM3

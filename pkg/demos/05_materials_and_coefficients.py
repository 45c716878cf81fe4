"""Material models, tabulated data ingestion, and dispersion coefficients.

Builds a synthetic absorption table for a free-electron metal, transforms it
to the imaginary axis, and compares with the closed-form model it was drawn
from.  Then reports the van der Waals and retarded coefficients for the
registry pairs together with the reflection-regime parameter rho.
"""

import numpy as np

from cpkit import (
    DispersionCoefficients,
    OpticalTable,
    TabulatedWall,
    c3,
    c4_ideal,
    c4_lifshitz,
    load_registry,
    permittivity_at,
    rho_parameter,
)
from cpkit.units import j_m3_to_ev_nm3, j_m4_to_ev_nm4

registry = load_registry()
helium = registry.atom("He*")
gold = registry.material("Au")

# --- tabulated route: synthesize Im eps of a Drude metal, transform back ----
omega_p, gamma = 1.37e16, 5.3e13
grid = np.geomspace(2e13, 3e16, 600)
table = OpticalTable(grid, omega_p ** 2 * gamma / (grid * (grid ** 2 + gamma ** 2)))
wall = TabulatedWall(table, metal=True)
print("imaginary-axis permittivity from tabulated absorption data:")
print("   xi [rad/s]    transform     closed form")
for xi in (1e14, 1e15, 1e16):
    exact = 1 + omega_p ** 2 / (xi * (xi + gamma))
    print(f"   {xi:9.1e}  {wall.permittivity(xi):12.3f}  {exact:12.3f}")

# --- dispersion coefficients -------------------------------------------------
print("\ncomputed coefficients for plasma gold + helium:")
c3_value = c3(gold, helium)
c4_value = c4_lifshitz(gold, helium).value
print(f"C3 = {j_m3_to_ev_nm3(c3_value):.4e} eV nm^3 (plasma model)")
print(f"C4 = {j_m4_to_ev_nm4(c4_value):.4f} eV nm^4 (ideal-wall value {j_m4_to_ev_nm4(c4_ideal(helium)):.4f})")

print("\nconfigured coefficients and the reflection-regime parameter:")
for name in ("Au", "Si"):
    potential = registry.coefficient(name)
    coefficients = DispersionCoefficients.from_c4_length(
        potential.c4, potential.length, c3_source="configured", c4_source="configured"
    )
    rho = rho_parameter(helium, coefficients)
    print(
        f"{name}: C4 = {j_m4_to_ev_nm4(potential.c4):.2f} eV nm^4, l = {potential.length * 1e9:.0f} nm, "
        f"rho = {rho:.2f} ({'retarded tail dominates' if rho > 1 else 'nonretarded dominates'})"
    )

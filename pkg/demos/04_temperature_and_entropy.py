"""Thermal effects: negative entropy for metals, monotone growth for dielectrics.

At laboratory temperature the free energy of the gold wall stays close to the
zero-temperature energy out to a couple of micrometres (the entropy deficit
holds it back), then crosses over to the classical 1/a^3 law, pulling away
from the surface potential by tens of percent.  For the dielectric wall the
entropy is positive everywhere, so the thermal free energy dominates the
zero-temperature energy at every separation and the mismatch grows faster.
"""

import numpy as np

from cpkit import (
    Scene,
    entropy,
    free_energy,
    load_registry,
    phenomenological_energy,
    relative_difference,
    zero_temperature_energy,
)

registry = load_registry()
helium = registry.atom("He*")

print("entropy of the gold wall at a = 2 um (negative at small tau):")
for tau in (0.25, 0.5, 1.0, 2.0, 5.0, 10.0):
    scene = Scene.from_tau(2e-6, tau)
    s = entropy(scene, registry.material("Au"), helium)
    print(f"tau = {tau:5.2f} (T = {scene.temperature:7.1f} K): S = {s:+.3e} J/K")

print("\nmismatch with the surface potential at T = 300 K:")
print("   a [um]    gold [%]   silicon [%]")
for a in (0.5e-6, 1e-6, 2e-6, 3e-6, 5e-6):
    row = []
    for name in ("Au", "Si"):
        wall = registry.material(name)
        accurate = free_energy(Scene(a, 300.0), wall, helium)
        reference = phenomenological_energy(registry.coefficient(name), a)
        row.append(100 * relative_difference(accurate, reference))
    print(f"{a * 1e6:8.1f}   {row[0]:+9.2f}   {row[1]:+10.2f}")

print("\nthermal enhancement |F(300K)|/|E(0)| for the silicon wall:")
for a in (0.2e-6, 1e-6, 3e-6):
    silicon = registry.material("Si")
    ratio = abs(free_energy(Scene(a, 300.0), silicon, helium)) / abs(
        zero_temperature_energy(a, silicon, helium)
    )
    print(f"a = {a * 1e6:.1f} um: {ratio:.4f}")

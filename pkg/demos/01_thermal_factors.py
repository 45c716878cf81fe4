"""Thermal correction factors of the ideal-wall interaction.

The free energy, force and entropy of a static atom facing a perfectly
reflecting wall factorize into the zero-temperature laws times dimensionless
functions of tau = 4*pi*k_B*a*T/(hbar*c).  This script tabulates the three
factors, shows where the entropy factor changes sign, and checks the
low-temperature series against the closed forms.
"""

import numpy as np

from cpkit import eta, eta_series, kappa, kappa_series, sigma, sigma_series, sigma_zero_crossing

print("tau        eta          kappa        sigma")
for tau in np.geomspace(0.1, 30.0, 12):
    print(f"{tau:8.3f}  {eta(tau):11.6f}  {kappa(tau):11.6f}  {sigma(tau):+12.6e}")

crossing = sigma_zero_crossing()
print(f"\nentropy factor changes sign at tau = {crossing:.6f}")
print("negative below (entropy deficit), positive above (classical plateau 1/6)")

print("\nsmall-tau series vs closed forms (absolute differences):")
for tau in (0.1, 0.3, 0.5):
    print(
        f"tau={tau}: eta {abs(eta(tau) - eta_series(tau)):.2e}"
        f"  kappa {abs(kappa(tau) - kappa_series(tau)):.2e}"
        f"  sigma {abs(sigma(tau) - sigma_series(tau)):.2e}"
    )
print("each bounded by the next power of tau left out of the series")

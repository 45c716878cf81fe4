"""Atom-wall dispersion interaction toolkit.

Computes the Casimir-Polder free energy, force and entropy of a ground-state
atom near a material wall from the finite-temperature Lifshitz formula,
together with the closed-form thermal factors, perturbative expansions and
dispersion coefficients that cross-validate the numerics and quantify the
phenomenological potential used in quantum-reflection analyses.
"""

__version__ = "0.1.0"

from .asymptotics import (
    ZETA_5,
    ZETA_7,
    ClassicalLimits,
    CorrectionFactors,
    casimir_polder_energy,
    casimir_polder_force,
    classical_limits,
    correction_factors,
    eta,
    eta_series,
    kappa,
    kappa_series,
    low_temperature_entropy,
    low_temperature_force_correction,
    low_temperature_free_energy_correction,
    perturbative_energy,
    perturbative_force,
    sigma,
    sigma_series,
    sigma_zero_crossing,
    tau_parameter,
)
from .atoms import (
    OscillatorAtom,
    OscillatorGeometry,
    StaticAtom,
    TabulatedAtom,
    geometry_params,
    polarizability_at,
)
from .config import Registry, describe, load_registry
from .errors import (
    ConfigError,
    ConvergenceError,
    TableError,
    UnsupportedModelError,
    ValidityWarning,
    ZeroFrequencyError,
)
from .lifshitz import (
    InteractionResult,
    Scene,
    entropy,
    force,
    free_energy,
    interaction,
    matsubara_term,
    zero_temperature_energy,
)
from .materials import (
    DielectricOscillator,
    DrudeMetal,
    IdealMetal,
    OpticalTable,
    PlasmaMetal,
    ReflectionPair,
    TabulatedWall,
    kramers_kronig,
    permittivity_at,
    reflection,
    static_permittivity,
)
from .phenomenology import (
    C4Estimate,
    DispersionCoefficients,
    PhenomenologicalPotential,
    c3,
    c4_ideal,
    c4_lifshitz,
    phenomenological_energy,
    relative_difference,
    rho_parameter,
)

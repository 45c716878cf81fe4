"""Built-in material/atom registry and the key-value configuration format.

Configuration files are INI-style.  Material sections look like

    [material.Au]
    kind = plasma
    omega_p_eV = 9.0

    [material.mysample]
    kind = tabulated
    table_path = /data/eps.txt
    metal = true

Atom sections carry ``alpha0_au``, ``omega0_eV``, ``mass_u`` (or
``table_path`` for tabulated polarizabilities), and phenomenological
coefficients live under ``[phenomenology.<material>]`` with any two of
``C3_eV_nm3``, ``C4_eV_nm4``, ``l_nm``.  All values are converted to SI once,
at ingestion.
"""

from __future__ import annotations

import configparser
import hashlib
import os
from dataclasses import dataclass, field

import numpy as np

from . import units
from .atoms import OscillatorAtom, StaticAtom, TabulatedAtom
from .errors import ConfigError
from .materials import (
    DielectricOscillator,
    DrudeMetal,
    IdealMetal,
    OpticalTable,
    PlasmaMetal,
    TabulatedWall,
)
from .phenomenology import PhenomenologicalPotential

__all__ = ["Registry", "load_registry", "describe", "CONFIG_ENV"]

CONFIG_ENV = "CPKIT_CONFIG"

# Default silicon resonance: a conventional ultraviolet absorption scale,
# configuration rather than ground truth; runs with this model are
# qualitative only.
SI_RESONANCE_EV = 4.34
# Default gold relaxation frequency for the Drude variant; a conventional
# literature figure supplied as configuration.
AU_GAMMA_EV = 0.035


def _default_materials():
    omega_p_au = units.ev_to_rad_s(9.0)
    return {
        "ideal": IdealMetal(),
        "Au": PlasmaMetal(omega_p=omega_p_au),
        "AuDrude": DrudeMetal(omega_p=omega_p_au, gamma=units.ev_to_rad_s(AU_GAMMA_EV)),
        "Si": DielectricOscillator(eps_static=11.66, resonance=units.ev_to_rad_s(SI_RESONANCE_EV)),
    }


def _default_atoms():
    helium = OscillatorAtom(
        alpha0=315.63 * units.AU_POLARIZABILITY,
        omega0=units.ev_to_rad_s(1.18),
        mass=4.0026 * units.atomic_mass,
    )
    return {"He*": helium, "He": helium}


def _default_coefficients():
    return {
        "Au": PhenomenologicalPotential(c4=1.1 * units.EV_NM4, length=172e-9),
        "Si": PhenomenologicalPotential(c4=0.75 * units.EV_NM4, length=136e-9),
    }


def describe(model):
    """Deterministic one-line description of a material or atom model."""
    kind = getattr(model, "kind", type(model).__name__)
    if isinstance(model, IdealMetal):
        return "ideal"
    if isinstance(model, PlasmaMetal) and not isinstance(model, DrudeMetal):
        return f"plasma omega_p_eV={units.rad_s_to_ev(model.omega_p):.12g}"
    if isinstance(model, DrudeMetal):
        return (f"drude omega_p_eV={units.rad_s_to_ev(model.omega_p):.12g} "
                f"gamma_eV={units.rad_s_to_ev(model.gamma):.12g}")
    if isinstance(model, DielectricOscillator):
        return (f"oscillator eps0={model.eps_static:.12g} "
                f"resonance_eV={units.rad_s_to_ev(model.resonance):.12g}")
    if isinstance(model, TabulatedWall):
        digest = hashlib.sha256(model.table.omega.tobytes() + model.table.im_eps.tobytes())
        return f"tabulated rows={model.table.omega.size} metal={model.metal} sha256={digest.hexdigest()[:12]}"
    if isinstance(model, StaticAtom):
        return f"static alpha0_au={model.alpha0 / units.AU_POLARIZABILITY:.12g} mass_u={model.mass / units.atomic_mass:.12g}"
    if isinstance(model, OscillatorAtom):
        return (f"oscillator alpha0_au={model.alpha0 / units.AU_POLARIZABILITY:.12g} "
                f"omega0_eV={units.rad_s_to_ev(model.omega0):.12g} "
                f"mass_u={model.mass / units.atomic_mass:.12g}")
    if isinstance(model, TabulatedAtom):
        digest = hashlib.sha256(model.xi.tobytes() + model.alpha.tobytes())
        return f"tabulated rows={model.xi.size} mass_u={model.mass / units.atomic_mass:.12g} sha256={digest.hexdigest()[:12]}"
    if isinstance(model, PhenomenologicalPotential):
        return (f"C4_eV_nm4={units.j_m4_to_ev_nm4(model.c4):.12g} "
                f"l_nm={model.length * 1e9:.12g}")
    return kind


@dataclass
class Registry:
    """Named materials, atoms and phenomenological coefficients."""

    materials: dict = field(default_factory=_default_materials)
    atoms: dict = field(default_factory=_default_atoms)
    coefficients: dict = field(default_factory=_default_coefficients)

    @classmethod
    def default(cls):
        return cls()

    def material(self, name):
        try:
            return self.materials[name]
        except KeyError:
            known = ", ".join(sorted(self.materials))
            raise ConfigError(f"unknown material '{name}'; known materials: {known}") from None

    def atom(self, name):
        try:
            return self.atoms[name]
        except KeyError:
            known = ", ".join(sorted(self.atoms))
            raise ConfigError(f"unknown atom '{name}'; known atoms: {known}") from None

    def coefficient(self, name):
        try:
            return self.coefficients[name]
        except KeyError:
            known = ", ".join(sorted(self.coefficients)) or "none"
            raise ConfigError(
                f"no phenomenological coefficients configured for '{name}'; configured: {known}"
            ) from None

    def config_hash(self):
        """Stable hash of the effective configuration, for provenance headers."""
        digest = hashlib.sha256()
        for group in (self.materials, self.atoms, self.coefficients):
            for name in sorted(group):
                digest.update(name.encode())
                digest.update(describe(group[name]).encode())
        return digest.hexdigest()[:16]


def _get_float(section, key, name):
    raw = section.get(key)
    if raw is None:
        raise ConfigError(f"section [{name}] is missing '{key}'")
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"section [{name}]: '{key}' is not a number: {raw!r}") from None


def _parse_material(section, name):
    kind = section.get("kind", "").strip().lower()
    if kind == "ideal":
        return IdealMetal()
    if kind == "plasma":
        return PlasmaMetal(omega_p=units.ev_to_rad_s(_get_float(section, "omega_p_ev", name)))
    if kind == "drude":
        return DrudeMetal(
            omega_p=units.ev_to_rad_s(_get_float(section, "omega_p_ev", name)),
            gamma=units.ev_to_rad_s(_get_float(section, "gamma_ev", name)),
        )
    if kind == "oscillator":
        return DielectricOscillator(
            eps_static=_get_float(section, "eps0", name),
            resonance=units.ev_to_rad_s(_get_float(section, "omega_osc_ev", name)),
        )
    if kind == "tabulated":
        path = section.get("table_path")
        if not path:
            raise ConfigError(f"section [{name}] is missing 'table_path'")
        table = OpticalTable.from_file(path)
        return TabulatedWall(table=table, metal=section.getboolean("metal", fallback=False))
    raise ConfigError(f"section [{name}]: unknown kind {kind!r}")


def _parse_atom(section, name):
    path = section.get("table_path")
    mass = _get_float(section, "mass_u", name) * units.atomic_mass if "mass_u" in section else 0.0
    if path:
        data = np.loadtxt(path, comments="#", ndmin=2)
        return TabulatedAtom(xi=data[:, 0], alpha=data[:, 1], mass=mass)
    alpha0 = _get_float(section, "alpha0_au", name) * units.AU_POLARIZABILITY
    if "omega0_ev" in section:
        return OscillatorAtom(alpha0=alpha0, omega0=units.ev_to_rad_s(_get_float(section, "omega0_ev", name)), mass=mass)
    return StaticAtom(alpha0=alpha0, mass=mass)


def _parse_coefficients(section, name):
    c3 = section.get("c3_ev_nm3")
    c4 = section.get("c4_ev_nm4")
    length = section.get("l_nm")
    if c4 is None:
        raise ConfigError(f"section [{name}] needs 'C4_eV_nm4'")
    c4_si = _get_float(section, "c4_ev_nm4", name) * units.EV_NM4
    if length is not None:
        length_si = _get_float(section, "l_nm", name) * 1e-9
        if c3 is not None:
            c3_si = _get_float(section, "c3_ev_nm3", name) * units.EV_NM3
            if abs(length_si - c4_si / c3_si) > 1e-6 * length_si:
                raise ConfigError(f"section [{name}]: l_nm is inconsistent with C4/C3")
        return PhenomenologicalPotential(c4=c4_si, length=length_si)
    if c3 is None:
        raise ConfigError(f"section [{name}] needs 'l_nm' or 'C3_eV_nm3' next to C4")
    c3_si = _get_float(section, "c3_ev_nm3", name) * units.EV_NM3
    return PhenomenologicalPotential(c4=c4_si, length=c4_si / c3_si)


def load_registry(path=None):
    """Default registry, optionally overlaid with a configuration file.

    The path argument wins over the CPKIT_CONFIG environment variable.
    Sections replace or add entries; built-in defaults remain otherwise.
    """
    registry = Registry.default()
    if path is None:
        path = os.environ.get(CONFIG_ENV) or None
    if path is None:
        return registry
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser()
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from None
    for section_name in parser.sections():
        section = parser[section_name]
        if section_name.startswith("material."):
            name = section_name.split(".", 1)[1]
            registry.materials[name] = _parse_material(section, section_name)
        elif section_name.startswith("atom."):
            name = section_name.split(".", 1)[1]
            registry.atoms[name] = _parse_atom(section, section_name)
        elif section_name.startswith("phenomenology."):
            name = section_name.split(".", 1)[1]
            registry.coefficients[name] = _parse_coefficients(section, section_name)
        else:
            raise ConfigError(f"unknown section [{section_name}]")
    return registry

"""Command-line front end: sweeps, coefficient reports, self-check, registry.

Exit codes: 0 success, 2 configuration error, 3 numerical failure (including
failed self-check or failed sweep points).  Sweep output is a delimited text
table with a provenance header; rerunning an identical command produces a
byte-identical file.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import __version__, asymptotics, phenomenology, units
from .atoms import StaticAtom
from .config import CONFIG_ENV, describe, load_registry
from .errors import ConfigError, ConvergenceError, UnsupportedModelError, ValidityWarning
from .lifshitz import (
    QUAD_EPSREL,
    SUM_REL_STOP,
    ZERO_T_EPSREL,
    Scene,
    entropy,
    force,
    free_energy,
    zero_temperature_energy,
)
from .materials import IdealMetal

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

QUANTITIES = ("free_energy", "force", "entropy", "a4E", "a4F_scaled", "sigma", "deltaE")


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a quantity on a grid at fixed temperature.

    The grid is the separation in metres for every quantity except ``sigma``,
    which sweeps the dimensionless temperature tau directly.
    """

    quantity: str
    start: float
    stop: float
    count: int
    log: bool
    temperature: float
    material: str
    atom: str

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ConfigError(f"unknown quantity '{self.quantity}'; choose from {', '.join(QUANTITIES)}")
        if self.count < 2:
            raise ConfigError("count must be at least 2")
        if not (self.start < self.stop):
            raise ConfigError("start must be below stop")
        if self.start <= 0.0:
            raise ConfigError("grid values must be positive")
        if self.temperature < 0.0:
            raise ConfigError("temperature must be non-negative")

    def grid(self):
        if self.log:
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


class SweepRow(NamedTuple):
    x: float
    value: float
    error: float
    status: str


def _fmt(value):
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return format(value, ".12g")


def _zero_t_force(separation, wall, atom):
    step = 1e-4 * separation
    upper = zero_temperature_energy(separation + step, wall, atom)
    lower = zero_temperature_energy(separation - step, wall, atom)
    return -(upper - lower) / (2.0 * step)


def _point_value(spec, wall, atom, potential, x):
    temperature = spec.temperature
    if spec.quantity == "sigma":
        return asymptotics.sigma(x)
    if spec.quantity == "free_energy":
        if temperature == 0.0:
            return zero_temperature_energy(x, wall, atom)
        return free_energy(Scene(x, temperature), wall, atom)
    if spec.quantity == "force":
        if temperature == 0.0:
            return _zero_t_force(x, wall, atom)
        return force(Scene(x, temperature), wall, atom)
    if spec.quantity == "entropy":
        return entropy(Scene(x, temperature), wall, atom)
    if spec.quantity == "a4E":
        if temperature == 0.0:
            energy = zero_temperature_energy(x, wall, atom)
        else:
            energy = free_energy(Scene(x, temperature), wall, atom)
        return units.j_m4_to_ev_nm4(x ** 4 * abs(energy))
    if spec.quantity == "a4F_scaled":
        if temperature == 0.0:
            f = _zero_t_force(x, wall, atom)
        else:
            f = force(Scene(x, temperature), wall, atom)
        return units.j_m4_to_ev_nm4(x ** 5 * abs(f))
    if spec.quantity == "deltaE":
        if temperature == 0.0:
            accurate = zero_temperature_energy(x, wall, atom)
        else:
            accurate = free_energy(Scene(x, temperature), wall, atom)
        reference = phenomenology.phenomenological_energy(potential, x)
        return 100.0 * phenomenology.relative_difference(accurate, reference)
    raise ConfigError(f"unhandled quantity {spec.quantity}")


def _sweep_point(spec, wall, atom, potential, x):
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ValidityWarning)
            value = _point_value(spec, wall, atom, potential, x)
        return SweepRow(x, value, 0.0, "ok")
    except ConvergenceError as exc:
        return SweepRow(x, float("nan"), exc.error_estimate or float("nan"), f"error:{type(exc).__name__}")
    except (ValueError, UnsupportedModelError) as exc:
        return SweepRow(x, float("nan"), float("nan"), f"error:{type(exc).__name__}")


def run_sweep(spec, registry, workers=1):
    """Evaluate a sweep; returns (header_lines, rows) in grid order.

    Per-point numerical failures are recorded in their row and the run
    continues.  Rows are gathered in ascending grid order regardless of the
    worker count, so output is deterministic.
    """
    wall = registry.material(spec.material)
    atom = registry.atom(spec.atom)
    potential = registry.coefficient(spec.material) if spec.quantity == "deltaE" else None
    if spec.quantity == "entropy" and spec.temperature == 0.0:
        raise ConfigError("entropy sweeps need --temperature-K > 0")
    grid = spec.grid()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda x: _sweep_point(spec, wall, atom, potential, float(x)), grid))
    else:
        rows = [_sweep_point(spec, wall, atom, potential, float(x)) for x in grid]
    x_name = "tau" if spec.quantity == "sigma" else "a_m"
    unit = {
        "free_energy": "J",
        "force": "N",
        "entropy": "J_per_K",
        "a4E": "eV_nm4",
        "a4F_scaled": "eV_nm4",
        "sigma": "dimensionless",
        "deltaE": "percent",
    }[spec.quantity]
    header = [
        f"# cpkit {__version__} sweep",
        f"# quantity: {spec.quantity} ({unit})",
        f"# material: {spec.material} [{describe(wall)}]",
        f"# atom: {spec.atom} [{describe(atom)}]",
        f"# temperature_K: {_fmt(spec.temperature)}",
        f"# grid: start={_fmt(spec.start)} stop={_fmt(spec.stop)} count={spec.count} "
        f"spacing={'log' if spec.log else 'linear'}",
        f"# tolerances: quad_epsrel={QUAD_EPSREL:g} matsubara_rel_stop={SUM_REL_STOP:g} "
        f"zero_t_epsrel={ZERO_T_EPSREL:g}",
        f"# config_sha256: {registry.config_hash()}",
        f"# columns: {x_name} value error status",
    ]
    if spec.quantity == "deltaE":
        header.insert(4, f"# phenomenological: {describe(potential)}")
    return header, rows


def render_sweep(header, rows):
    lines = list(header)
    for row in rows:
        lines.append(f"{_fmt(row.x)} {_fmt(row.value)} {_fmt(row.error)} {row.status}")
    return "\n".join(lines) + "\n"


def coefficients_report(material_name, atom_name, registry):
    """Computed and configured dispersion coefficients, side by side."""
    wall = registry.material(material_name)
    atom = registry.atom(atom_name)
    lines = [
        f"# cpkit {__version__} coefficients",
        f"# material: {material_name} [{describe(wall)}]",
        f"# atom: {atom_name} [{describe(atom)}]",
    ]
    qualitative = not isinstance(wall, IdealMetal) and getattr(wall, "kind", "") == "oscillator"
    try:
        computed_c3 = phenomenology.c3(wall, atom, ideal_metal_limit=isinstance(wall, IdealMetal))
        lines.append(f"C3_computed_eV_nm3 {_fmt(units.j_m3_to_ev_nm3(computed_c3))}")
    except (UnsupportedModelError, ValueError) as exc:
        computed_c3 = None
        lines.append(f"C3_computed_eV_nm3 n/a ({exc})")
    if isinstance(wall, IdealMetal):
        computed_c4 = phenomenology.c4_ideal(atom)
        lines.append(f"C4_computed_eV_nm4 {_fmt(units.j_m4_to_ev_nm4(computed_c4))}")
    else:
        estimate = phenomenology.c4_lifshitz(wall, atom)
        computed_c4 = estimate.value
        lines.append(
            f"C4_computed_eV_nm4 {_fmt(units.j_m4_to_ev_nm4(estimate.value))} "
            f"(extrapolation residual {_fmt(units.j_m4_to_ev_nm4(estimate.residual))})"
        )
    if computed_c3 is not None and computed_c4 is not None:
        lines.append(f"l_computed_nm {_fmt(computed_c4 / computed_c3 * 1e9)}")
    try:
        configured = registry.coefficient(material_name)
    except ConfigError:
        configured = None
    if configured is not None:
        lines.append(f"C3_configured_eV_nm3 {_fmt(units.j_m3_to_ev_nm3(configured.c3))}")
        lines.append(f"C4_configured_eV_nm4 {_fmt(units.j_m4_to_ev_nm4(configured.c4))}")
        lines.append(f"l_configured_nm {_fmt(configured.length * 1e9)}")
        coeffs = phenomenology.DispersionCoefficients.from_c4_length(
            configured.c4, configured.length, c3_source="configured", c4_source="configured"
        )
    elif computed_c3 is not None and computed_c4 is not None:
        coeffs = phenomenology.DispersionCoefficients.from_c3_c4(computed_c3, computed_c4)
    else:
        coeffs = None
    if coeffs is not None and atom.mass > 0.0:
        source = "configured" if configured is not None else "computed"
        lines.append(f"rho {_fmt(phenomenology.rho_parameter(atom, coeffs))} ({source})")
    if qualitative:
        lines.append("note: oscillator wall model; values are non-quantitative")
    if configured is None:
        lines.append("note: no configured coefficients; computed values only")
    return lines


def _check_rows(registry):
    """Oracle suite: (name, residual, tolerance) triples."""
    from .lifshitz import free_energy as fe, force as fo

    wall = IdealMetal()
    atom = registry.atom("He*")
    static = StaticAtom(alpha0=atom.alpha0, mass=atom.mass)
    gold = registry.material("Au")
    rows = []

    for tau in (0.5, 6.0):
        scene = Scene.from_tau(2e-6, tau)
        exact = asymptotics.casimir_polder_energy(scene.separation, static.alpha0) * asymptotics.eta(tau)
        numeric = fe(scene, wall, static, method="numeric")
        rows.append((f"eta-oracle tau={tau}", abs(numeric / exact - 1.0), 1e-8))
        exact_f = asymptotics.casimir_polder_force(scene.separation, static.alpha0) * asymptotics.kappa(tau)
        numeric_f = fo(scene, wall, static, method="numeric")
        rows.append((f"kappa-oracle tau={tau}", abs(numeric_f / exact_f - 1.0), 1e-7))

    crossing = asymptotics.sigma_zero_crossing()
    rows.append(("sigma-crossing vs 3.0", abs(crossing - 3.0), 0.3))

    scene = Scene.from_tau(6e-6, 30.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        classical = asymptotics.classical_limits(scene.separation, scene.temperature, static)
    numeric = fe(scene, wall, static, method="numeric")
    rows.append(("classical-limit tau=30", abs(numeric / classical.free_energy - 1.0), 1e-3))

    rows.append(("zeta5", abs(asymptotics.ZETA_5 - 1.036927755), 1e-9))
    rows.append(("zeta7", abs(asymptotics.ZETA_7 - 1.008349277), 1e-9))

    tau = 0.3
    rows.append(("eta-series tau=0.3", abs(asymptotics.eta(tau) - asymptotics.eta_series(tau)), tau ** 10))
    rows.append(("kappa-series tau=0.3", abs(asymptotics.kappa(tau) - asymptotics.kappa_series(tau)), tau ** 10))
    rows.append(("sigma-series tau=0.3", abs(asymptotics.sigma(tau) - asymptotics.sigma_series(tau)), tau ** 7))

    scene = Scene(1e-6, 300.0)
    step = 1e-4 * scene.separation
    f_numeric = fo(scene, gold, atom)
    gradient = -(fe(Scene(scene.separation + step, 300.0), gold, atom)
                 - fe(Scene(scene.separation - step, 300.0), gold, atom)) / (2.0 * step)
    rows.append(("force-gradient Au 1um 300K", abs(f_numeric / gradient - 1.0), 1e-5))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        pert = asymptotics.perturbative_energy(2e-6, atom, gold)
    full = zero_temperature_energy(2e-6, gold, atom)
    rows.append(("perturbative-vs-integral Au 2um", abs(pert / full - 1.0), 1e-2))
    return rows


def run_self_check(registry, stream=None):
    """Run the oracle suite and print one residual line per check."""
    stream = stream or sys.stdout
    rows = _check_rows(registry)
    all_ok = True
    for name, residual, tolerance in rows:
        ok = residual <= tolerance
        all_ok &= ok
        stream.write(f"{'PASS' if ok else 'FAIL'} {name}: residual {residual:.3e} (tol {tolerance:.1e})\n")
    stream.write(("self-check passed\n" if all_ok else "self-check FAILED\n"))
    return all_ok


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cpkit",
        description="Atom-wall dispersion interaction calculations and sweeps.",
    )
    parser.add_argument("--config", help=f"configuration file (overrides ${CONFIG_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate a quantity over a separation (or tau) grid")
    sweep.add_argument("--quantity", required=True, choices=QUANTITIES)
    sweep.add_argument("--material", default="Au")
    sweep.add_argument("--atom", default="He*")
    sweep.add_argument("--temperature-K", type=float, default=0.0, dest="temperature")
    sweep.add_argument("--amin", type=float, required=True,
                       help="grid start (metres; tau for sigma sweeps)")
    sweep.add_argument("--amax", type=float, required=True,
                       help="grid stop (metres; tau for sigma sweeps)")
    sweep.add_argument("--points", type=int, default=50)
    sweep.add_argument("--log", action="store_true", help="logarithmic grid spacing")
    sweep.add_argument("--out", help="output path (default stdout)")
    sweep.add_argument("--workers", type=int, default=1, help="concurrent sweep-point workers")

    coeffs = sub.add_parser("coeffs", help="report dispersion coefficients and rho")
    coeffs.add_argument("--material", default="Au")
    coeffs.add_argument("--atom", default="He*")

    sub.add_parser("selfcheck", help="run the oracle cross-check suite")
    sub.add_parser("materials", help="list registry entries")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        registry = load_registry(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "sweep":
            spec = SweepSpec(
                quantity=args.quantity,
                start=args.amin,
                stop=args.amax,
                count=args.points,
                log=args.log,
                temperature=args.temperature,
                material=args.material,
                atom=args.atom,
            )
            header, rows = run_sweep(spec, registry, workers=max(1, args.workers))
            text = render_sweep(header, rows)
            if args.out:
                with open(args.out, "w") as handle:
                    handle.write(text)
            else:
                sys.stdout.write(text)
            if any(row.status != "ok" for row in rows):
                return EXIT_NUMERIC
            return EXIT_OK
        if args.command == "coeffs":
            for line in coefficients_report(args.material, args.atom, registry):
                print(line)
            return EXIT_OK
        if args.command == "selfcheck":
            return EXIT_OK if run_self_check(registry) else EXIT_NUMERIC
        if args.command == "materials":
            print(f"# cpkit {__version__} registry (config {registry.config_hash()})")
            for name in sorted(registry.materials):
                print(f"material {name}: {describe(registry.materials[name])}")
            for name in sorted(registry.atoms):
                print(f"atom {name}: {describe(registry.atoms[name])}")
            for name in sorted(registry.coefficients):
                print(f"phenomenology {name}: {describe(registry.coefficients[name])}")
            return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

import numpy as np
import pytest

from cpkit import ConfigError, DrudeMetal, OscillatorAtom, PlasmaMetal, TabulatedWall
from cpkit.cli import (
    EXIT_CONFIG,
    EXIT_NUMERIC,
    EXIT_OK,
    SweepSpec,
    coefficients_report,
    main,
    render_sweep,
    run_self_check,
    run_sweep,
)
from cpkit.config import Registry, describe, load_registry
from cpkit.units import ev_to_rad_s


# ----------------------------------------------------------------- registry

def test_default_registry_contents():
    registry = Registry.default()
    gold = registry.material("Au")
    assert isinstance(gold, PlasmaMetal)
    assert gold.omega_p == pytest.approx(ev_to_rad_s(9.0), rel=1e-14)
    assert isinstance(registry.material("AuDrude"), DrudeMetal)
    helium = registry.atom("He*")
    assert isinstance(helium, OscillatorAtom)
    assert registry.atom("He") is helium
    assert registry.coefficient("Au").length == pytest.approx(172e-9)
    assert registry.coefficient("Si").length == pytest.approx(136e-9)


def test_registry_unknown_names():
    registry = Registry.default()
    with pytest.raises(ConfigError, match="known materials"):
        registry.material("unobtainium")
    with pytest.raises(ConfigError, match="known atoms"):
        registry.atom("Xe")
    with pytest.raises(ConfigError, match="configured"):
        registry.coefficient("AuDrude")


def test_config_overlay(tmp_path):
    table = tmp_path / "eps.txt"
    grid = np.geomspace(1e13, 1e17, 50)
    im = 1e42 / (grid * (grid ** 2 + (5e13) ** 2))
    table.write_text(
        "# omega_rad_s im_eps\n"
        + "\n".join(f"{w:.8e} {i:.8e}" for w, i in zip(grid, im))
        + "\n"
    )
    config = tmp_path / "cpkit.ini"
    config.write_text(
        f"""
[material.slab]
kind = tabulated
table_path = {table}
metal = true

[material.glass]
kind = oscillator
eps0 = 3.8
omega_osc_ev = 8.0

[atom.Na]
alpha0_au = 162.7
omega0_eV = 2.1
mass_u = 22.99

[phenomenology.glass]
C4_eV_nm4 = 0.5
l_nm = 100
"""
    )
    registry = load_registry(str(config))
    assert isinstance(registry.material("slab"), TabulatedWall)
    assert registry.material("slab").metal is True
    assert registry.material("glass").eps_static == pytest.approx(3.8)
    sodium = registry.atom("Na")
    assert sodium.omega0 == pytest.approx(ev_to_rad_s(2.1), rel=1e-14)
    assert registry.coefficient("glass").c3 == pytest.approx(
        registry.coefficient("glass").c4 / 100e-9, rel=1e-14
    )
    # defaults survive the overlay
    assert registry.material("Au").omega_p == pytest.approx(ev_to_rad_s(9.0), rel=1e-14)


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_registry(str(tmp_path / "missing.ini"))
    bad = tmp_path / "bad.ini"
    bad.write_text("[material.x]\nkind = warpdrive\n")
    with pytest.raises(ConfigError, match="unknown kind"):
        load_registry(str(bad))
    bad.write_text("[流量]\nkey = 1\n")
    with pytest.raises(ConfigError, match="unknown section"):
        load_registry(str(bad))
    bad.write_text("[phenomenology.x]\nC4_eV_nm4 = 1.0\nC3_eV_nm3 = 0.01\nl_nm = 500\n")
    with pytest.raises(ConfigError, match="inconsistent"):
        load_registry(str(bad))


def test_config_env_variable(tmp_path, monkeypatch):
    config = tmp_path / "env.ini"
    config.write_text("[material.envmetal]\nkind = plasma\nomega_p_eV = 5.0\n")
    monkeypatch.setenv("CPKIT_CONFIG", str(config))
    registry = load_registry()
    assert registry.material("envmetal").omega_p == pytest.approx(ev_to_rad_s(5.0), rel=1e-14)


def test_config_hash_stability():
    assert Registry.default().config_hash() == Registry.default().config_hash()
    registry = Registry.default()
    registry.materials["extra"] = PlasmaMetal(omega_p=1e16)
    assert registry.config_hash() != Registry.default().config_hash()


def test_describe_is_deterministic():
    registry = Registry.default()
    for name, model in registry.materials.items():
        assert describe(model) == describe(model)


# ------------------------------------------------------------------- sweeps

def test_sweep_spec_validation():
    with pytest.raises(ConfigError):
        SweepSpec("free_energy", 2.0, 1.0, 5, False, 300.0, "Au", "He*")
    with pytest.raises(ConfigError):
        SweepSpec("free_energy", 1e-7, 1e-6, 1, False, 300.0, "Au", "He*")
    with pytest.raises(ConfigError):
        SweepSpec("wrong", 1e-7, 1e-6, 5, False, 300.0, "Au", "He*")


def test_sigma_sweep_changes_sign_in_window():
    registry = Registry.default()
    spec = SweepSpec("sigma", 0.1, 10.0, 41, True, 0.0, "Au", "He*")
    _, rows = run_sweep(spec, registry)
    values = [(row.x, row.value) for row in rows]
    crossings = [
        (x1, x2) for (x1, v1), (x2, v2) in zip(values, values[1:]) if v1 < 0.0 <= v2
    ]
    assert len(crossings) == 1
    assert 2.7 < crossings[0][0] < crossings[0][1] < 3.3


def test_sweep_rerun_is_byte_identical():
    registry = Registry.default()
    spec = SweepSpec("free_energy", 5e-7, 2e-6, 4, True, 300.0, "Au", "He*")
    first = render_sweep(*run_sweep(spec, registry))
    second = render_sweep(*run_sweep(spec, registry))
    assert first == second


def test_sweep_worker_count_invariance():
    registry = Registry.default()
    spec = SweepSpec("a4E", 5e-7, 2e-6, 6, True, 300.0, "Au", "He*")
    serial = render_sweep(*run_sweep(spec, registry, workers=1))
    threaded = render_sweep(*run_sweep(spec, registry, workers=4))
    assert serial == threaded


def test_a4e_sweep_plateau():
    registry = Registry.default()
    spec = SweepSpec("a4E", 2e-8, 1e-5, 7, True, 0.0, "Au", "He*")
    _, rows = run_sweep(spec, registry)
    assert all(row.status == "ok" for row in rows)
    # the large-separation plateau sits at the retarded coefficient
    assert rows[-1].value == pytest.approx(1.1, rel=5e-2)
    # a^4|E| grows towards the plateau
    assert rows[0].value < rows[-1].value


def test_entropy_sweep_needs_temperature():
    registry = Registry.default()
    spec = SweepSpec("entropy", 1e-6, 2e-6, 3, False, 0.0, "Au", "He*")
    with pytest.raises(ConfigError):
        run_sweep(spec, registry)


def test_delta_e_needs_coefficients():
    registry = Registry.default()
    spec = SweepSpec("deltaE", 1e-6, 2e-6, 3, False, 0.0, "AuDrude", "He*")
    with pytest.raises(ConfigError):
        run_sweep(spec, registry)


# ------------------------------------------------------------------ reports

def test_coefficients_report_gold():
    registry = Registry.default()
    lines = coefficients_report("Au", "He*", registry)
    text = "\n".join(lines)
    assert "l_configured_nm 172" in text
    assert "rho 2.668" in text
    assert "C3_computed_eV_nm3" in text


def test_coefficients_report_silicon_flags_model():
    registry = Registry.default()
    text = "\n".join(coefficients_report("Si", "He*", registry))
    assert "l_configured_nm 136" in text
    assert "non-quantitative" in text


def test_self_check_passes(capsys):
    assert run_self_check(Registry.default()) is True
    out = capsys.readouterr().out
    assert "FAIL" not in out


# ---------------------------------------------------------------------- cli

def test_cli_materials_and_exit_codes(capsys):
    assert main(["materials"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "material Au:" in out
    assert "atom He*:" in out


def test_cli_sweep_to_file_and_rerun(tmp_path, capsys):
    out1 = tmp_path / "one.txt"
    out2 = tmp_path / "two.txt"
    argv = [
        "sweep", "--quantity", "sigma", "--amin", "0.5", "--amax", "5",
        "--points", "5", "--log", "--out",
    ]
    assert main(argv + [str(out1)]) == EXIT_OK
    assert main(argv + [str(out2)]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text().splitlines()
    assert header[0].startswith("# cpkit")
    assert any(line.startswith("# config_sha256:") for line in header)


def test_cli_unknown_material_is_config_error(capsys):
    code = main(["sweep", "--quantity", "free_energy", "--material", "nope",
                 "--amin", "1e-7", "--amax", "1e-6", "--points", "2"])
    assert code == EXIT_CONFIG
    assert "known materials" in capsys.readouterr().err


def test_cli_missing_config_file(capsys):
    code = main(["--config", "/nonexistent/path.ini", "materials"])
    assert code == EXIT_CONFIG


def test_cli_coeffs_command(capsys):
    assert main(["coeffs", "--material", "Si", "--atom", "He*"]) == EXIT_OK
    assert "C4_configured_eV_nm4 0.75" in capsys.readouterr().out

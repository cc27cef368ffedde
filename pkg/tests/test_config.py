"""Config file parsing: units, defaults, strictness, round-trips."""

import pytest

from afq import parse_config_text
from afq.config import SCHEMA, load_config
from afq.errors import ConfigError

MINIMAL = """\
potential.kind = lennard-jones
potential.epsilon_mev = 17.4
potential.sigma_angstrom = 3.826
material.young_modulus_gpa = 160
material.density_kg_m3 = 2329
cantilever.length_nm = 495
cantilever.width_nm = 10
cantilever.thickness_nm = 12
bias.auto = true
"""


def test_unit_conversions():
    cfg = parse_config_text(MINIMAL)
    assert cfg.si["cantilever.length_nm"] == pytest.approx(4.95e-7, rel=1e-15)
    assert cfg.si["potential.sigma_angstrom"] == pytest.approx(3.826e-10)
    assert cfg.si["material.young_modulus_gpa"] == pytest.approx(1.6e11)
    assert cfg.si["potential.epsilon_mev"] == pytest.approx(2.7878e-21,
                                                            rel=1e-4)


def test_auto_bias_resolution():
    cfg = parse_config_text(MINIMAL)
    pot = cfg.potential()
    assert cfg.bias_gap(pot) == pytest.approx(pot.inflection, rel=1e-12)


def test_explicit_bias_gap():
    text = MINIMAL.replace("bias.auto = true", "bias.x_over_sigma = 1.3")
    cfg = parse_config_text(text)
    assert cfg.display["bias.auto"] is False
    pot = cfg.potential()
    assert cfg.bias_gap(pot) == pytest.approx(1.3 * pot.sigma, rel=1e-15)


def test_conflicting_bias_keys():
    text = MINIMAL + "bias.x_over_sigma = 1.3\n"
    with pytest.raises(ConfigError, match="conflicts"):
        parse_config_text(text)


def test_manual_bias_requires_gap():
    text = MINIMAL.replace("bias.auto = true", "bias.auto = false")
    with pytest.raises(ConfigError, match="requires"):
        parse_config_text(text)


def test_missing_unit_suffix_names_expected_key():
    text = MINIMAL.replace("cantilever.length_nm = 495",
                           "cantilever.length = 495")
    with pytest.raises(ConfigError, match="cantilever.length_nm"):
        parse_config_text(text)


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config_text(MINIMAL + "cantilever.colour = blue\n")


def test_missing_required_reports_full_paths():
    with pytest.raises(ConfigError) as err:
        parse_config_text("potential.kind = lennard-jones\n")
    message = str(err.value)
    assert "potential.epsilon_mev" in message
    assert "cantilever.length_nm" in message


def test_duplicate_key_rejected():
    with pytest.raises(ConfigError, match="duplicate"):
        parse_config_text(MINIMAL + "cantilever.width_nm = 11\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ConfigError, match="line 2"):
        parse_config_text("potential.kind = lennard-jones\nnot a line\n")
    with pytest.raises(ConfigError, match="not a number"):
        parse_config_text(MINIMAL.replace("= 495", "= wide"))
    with pytest.raises(ConfigError, match="boolean"):
        parse_config_text(MINIMAL.replace("bias.auto = true",
                                          "bias.auto = maybe"))


def test_comments_and_blank_lines():
    text = "# header\n\n" + MINIMAL.replace(
        "potential.epsilon_mev = 17.4",
        "potential.epsilon_mev = 17.4  # well depth")
    cfg = parse_config_text(text)
    assert cfg.display["potential.epsilon_mev"] == 17.4


def test_defaults_resolved_and_echo_complete():
    cfg = parse_config_text(MINIMAL)
    assert set(cfg.display) == set(SCHEMA)
    assert cfg.display["spectrum.n_max"] == 5
    assert cfg.display["sweep.length_points"] == 100
    assert cfg.display["cqad.omega_m_mhz"] == 67.0


def test_display_si_round_trip():
    cfg = parse_config_text(MINIMAL)
    for key, field in SCHEMA.items():
        value = cfg.display[key]
        if field.kind != "float" or value is None:
            continue
        assert cfg.si[key] / field.unit == pytest.approx(value, rel=1e-15)


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "nope.cfg")


def test_load_config_file(tmp_path):
    path = tmp_path / "design.cfg"
    path.write_text(MINIMAL)
    cfg = load_config(path)
    assert cfg.si["material.density_kg_m3"] == 2329.0

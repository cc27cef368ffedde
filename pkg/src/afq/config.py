"""Configuration file loading.

The format is line-oriented ``section.key = value`` text; units are
encoded in key suffixes (``_nm``, ``_mhz``, ``_mev``, ...) and converted
to SI exactly once, here. Unknown keys are rejected (with a pointer at
the expected suffixed key when the stem matches), missing required keys
are reported with their full paths, and every omitted optional key is
resolved to its default so a config echo always shows the complete
effective configuration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cantilever import CantileverGeometry, MaterialParams
from .errors import ConfigError
from .potential import LennardJones, find_bias_point
from .units import ANGSTROM, FM, GHZ, GPA, MEV, MHZ, MK, NM

_REQUIRED = object()


@dataclass(frozen=True)
class _Field:
    kind: str                  # "float" | "int" | "bool" | "str"
    unit: float = 1.0          # display -> SI multiplier (floats only)
    default: object = _REQUIRED
    choices: tuple = ()


# schema order is also the echo order
SCHEMA = {
    "potential.kind": _Field("str", default="lennard-jones",
                             choices=("lennard-jones",)),
    "potential.epsilon_mev": _Field("float", MEV),
    "potential.sigma_angstrom": _Field("float", ANGSTROM),
    "material.young_modulus_gpa": _Field("float", GPA),
    "material.density_kg_m3": _Field("float"),
    "cantilever.length_nm": _Field("float", NM),
    "cantilever.width_nm": _Field("float", NM),
    "cantilever.thickness_nm": _Field("float", NM),
    "bias.auto": _Field("bool", default=True),
    "bias.x_over_sigma": _Field("float", default=None),
    "spectrum.n_max": _Field("int", default=5),
    "spectrum.temperature_mk": _Field("float", MK, default=8.0),
    "sweep.length_min_nm": _Field("float", NM, default=200.0),
    "sweep.length_max_nm": _Field("float", NM, default=800.0),
    "sweep.length_points": _Field("int", default=100),
    "sweep.x_over_sigma_min": _Field("float", default=1.15),
    "sweep.x_over_sigma_max": _Field("float", default=2.0),
    "sweep.x_points": _Field("int", default=100),
    "sweep.temperature_mk": _Field("float", MK, default=8.0),
    "cqad.omega_q_mhz": _Field("float", MHZ, default=None),
    "cqad.omega_m_mhz": _Field("float", MHZ, default=67.0),
    "cqad.omega_r_ghz": _Field("float", GHZ, default=5.0),
    "cqad.omega_d_ghz": _Field("float", GHZ, default=None),
    "cqad.g_mhz": _Field("float", MHZ, default=1.0),
    "cqad.qubit_quality": _Field("float", default=1e10),
    "cqad.mech_quality": _Field("float", default=1e4),
    "cqad.kappa_i_mhz": _Field("float", MHZ, default=0.1),
    "cqad.kappa_e_mhz": _Field("float", MHZ, default=0.9),
    "cqad.drive_photons": _Field("float", default=1e4),
    "cqad.participation": _Field("float", default=0.5),
    "cqad.gap_nm": _Field("float", NM, default=60.0),
    "cqad.readout_x_zpf_fm": _Field("float", FM, default=4.0),
    "cqad.probe_min_mhz": _Field("float", MHZ, default=60.0),
    "cqad.probe_max_mhz": _Field("float", MHZ, default=74.0),
    "cqad.probe_points": _Field("int", default=2001),
    "oracle.grid_half_width_zpf": _Field("float", default=15.0),
    "oracle.grid_right_clip": _Field("float", default=0.9),
    "oracle.grid_points": _Field("int", default=4001),
    "oracle.n_levels": _Field("int", default=5),
}

# default paper-design damping anchors: qubit Q ~ 1e10 (phononic-shield
# limited), readout-mechanics Q ~ 1e4 (modest, still strongly dispersive)


@dataclass(frozen=True)
class RunConfig:
    """Parsed configuration: display-unit echo plus SI values."""

    display: dict      # full key -> value in display units (echo order)
    si: dict           # full key -> value in SI (floats converted)

    def potential(self) -> LennardJones:
        return LennardJones(epsilon=self.si["potential.epsilon_mev"],
                            sigma=self.si["potential.sigma_angstrom"])

    def material(self) -> MaterialParams:
        return MaterialParams(
            young_modulus=self.si["material.young_modulus_gpa"],
            density=self.si["material.density_kg_m3"])

    def geometry(self) -> CantileverGeometry:
        return CantileverGeometry(length=self.si["cantilever.length_nm"],
                                  width=self.si["cantilever.width_nm"],
                                  thickness=self.si["cantilever.thickness_nm"])

    def bias_gap(self, potential: LennardJones | None = None) -> float:
        """Configured gap; ``bias.auto`` resolves the curvature-free point."""
        pot = potential if potential is not None else self.potential()
        ratio = self.si["bias.x_over_sigma"]
        if ratio is not None:
            return ratio * pot.sigma
        return find_bias_point(pot, (1.05 * pot.sigma, 2.0 * pot.sigma))


def _parse_value(key: str, field: _Field, text: str, line_no: int):
    if field.kind == "bool":
        low = text.lower()
        if low in ("true", "yes", "1"):
            return True
        if low in ("false", "no", "0"):
            return False
        raise ConfigError(f"line {line_no}: {key}: expected a boolean, got {text!r}")
    if field.kind == "str":
        if field.choices and text not in field.choices:
            raise ConfigError(f"line {line_no}: {key}: expected one of "
                              f"{field.choices}, got {text!r}")
        return text
    try:
        if field.kind == "int":
            return int(text)
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"line {line_no}: {key}: not a number: {text!r}") from exc


def _unknown_key_message(key: str) -> str:
    stem = key + "_"
    matches = [k for k in SCHEMA if k.startswith(stem)]
    if matches:
        return (f"unknown key {key!r}: missing unit suffix, expected "
                f"{matches[0]!r}")
    return f"unknown key {key!r}"


def parse_config_text(text: str, source: str = "<config>") -> RunConfig:
    seen: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}: line {line_no}: expected "
                              f"'section.key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in SCHEMA:
            raise ConfigError(f"{source}: line {line_no}: "
                              + _unknown_key_message(key))
        if key in seen:
            raise ConfigError(f"{source}: line {line_no}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"{source}: line {line_no}: {key}: empty value")
        seen[key] = _parse_value(key, SCHEMA[key], value, line_no)

    missing = [k for k, f in SCHEMA.items()
               if f.default is _REQUIRED and k not in seen]
    if missing:
        raise ConfigError(f"{source}: missing required keys: "
                          + ", ".join(missing))
    if seen.get("bias.auto") is True and seen.get("bias.x_over_sigma") is not None:
        raise ConfigError(f"{source}: bias.auto = true conflicts with an "
                          "explicit bias.x_over_sigma")
    if seen.get("bias.auto") is False and seen.get("bias.x_over_sigma") is None:
        raise ConfigError(f"{source}: bias.auto = false requires "
                          "bias.x_over_sigma")

    display = {}
    si = {}
    for key, field in SCHEMA.items():
        value = seen.get(key, field.default)
        if key == "bias.auto":
            # explicit gap implies manual bias unless auto was asked for
            value = seen.get("bias.auto",
                             seen.get("bias.x_over_sigma") is None)
        display[key] = value
        if field.kind == "float" and value is not None:
            si[key] = value * field.unit
        else:
            si[key] = value
    return RunConfig(display=display, si=si)


def load_config(path) -> RunConfig:
    """Parse a ``section.key = value`` config file into a RunConfig."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text, source=str(path))

"""Line-oriented configuration: molecules, materials, and mirrors.

Format: section headers [molecule:NAME], [material:NAME], [mirror:NAME]
followed by key = value lines; '#' starts a comment; SI units throughout.

  [molecule:LiH-custom]
  transition = 2.78973e12 3.847e-58     # omega_rad_per_s  d_squared_C2m2

  [material:mymetal]
  model = drude
  plasma_frequency = 1.37e16
  damping = 5.32e13

  [material:myglass]
  model = constant
  eps_real = 10.0
  eps_imag = 1e-4

  [mirror:mywall]
  type = halfspace          # or: constant_r (key r), quarter_wave
  material = mymetal

  [mirror:bragg]
  type = quarter_wave
  material_a = sapphire_300K
  material_b = vacuum
  pairs = 8
  design_frequency = 2.78973e12

Built-in molecules (LiH) and materials/mirrors (gold, sapphire at both
temperature tags, GaAs, AlAs, vacuum) are always present; user entries may
override them, which is reported as a warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .materials import ConstantLossy, ConstantR, Drude, HalfSpace, \
    MirrorSpec, PermittivityModel, Stack, Vacuum, quarter_wave_stack
from .molecules import Molecule, Transition, builtin_molecules

__all__ = ["ConfigError", "Registry", "load_registry", "parse_quantity",
           "builtin_materials", "builtin_mirrors"]


class ConfigError(ValueError):
    """Malformed configuration, with line context."""


def builtin_materials() -> Dict[str, PermittivityModel]:
    return {
        "vacuum": Vacuum(),
        "gold": Drude(plasma_frequency=1.37e16, damping=5.32e13),
        "sapphire_300K": ConstantLossy(eps_real=10.0, eps_imag=1e-4),
        "sapphire_77K": ConstantLossy(eps_real=10.0, eps_imag=1e-6),
        "GaAs": ConstantLossy(eps_real=12.96, eps_imag=0.02),
        "AlAs": ConstantLossy(eps_real=10.96, eps_imag=0.02),
    }


def builtin_mirrors() -> Dict[str, MirrorSpec]:
    return {"gold": HalfSpace(builtin_materials()["gold"])}


@dataclass
class Registry:
    molecules: Dict[str, Molecule] = field(default_factory=builtin_molecules)
    materials: Dict[str, PermittivityModel] = field(
        default_factory=builtin_materials)
    mirrors: Dict[str, MirrorSpec] = field(default_factory=builtin_mirrors)


_SUFFIXES = {"um": 1e-6, "mm": 1e-3, "cm": 1e-2, "m": 1.0, "nm": 1e-9,
             "K": 1.0}


def parse_quantity(text: str) -> float:
    """Parse a number with an optional unit suffix (um/mm/cm/m/nm/K)."""
    text = text.strip()
    for suffix, scale in sorted(_SUFFIXES.items(), key=lambda s: -len(s[0])):
        if text.endswith(suffix):
            head = text[:-len(suffix)]
            if head and (head[-1].isdigit() or head[-1] == "."):
                return float(head) * scale
    return float(text)


def _parse_sections(text: str) -> List[Tuple[str, str, Dict, List, int]]:
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]") or ":" not in line:
                raise ConfigError(
                    f"line {lineno}: section header must look like "
                    f"[kind:NAME], got {raw.strip()!r}")
            kind, name = line[1:-1].split(":", 1)
            kind, name = kind.strip(), name.strip()
            if kind not in ("molecule", "material", "mirror"):
                raise ConfigError(f"line {lineno}: unknown section kind "
                                  f"{kind!r}")
            if not name:
                raise ConfigError(f"line {lineno}: empty section name")
            current = (kind, name, {}, [], lineno)
            sections.append(current)
            continue
        if current is None:
            raise ConfigError(f"line {lineno}: key-value line outside any "
                              f"section")
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got "
                              f"{raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "transition":
            current[3].append((lineno, value))
        else:
            current[2][key] = (lineno, value)
    return sections


def _require(fields: Dict, key: str, kind: str, name: str, header_line: int):
    if key not in fields:
        raise ConfigError(f"[{kind}:{name}] (line {header_line}): missing "
                          f"required key {key!r}")
    return fields[key][1]


def _build_molecule(name, fields, transitions, header_line) -> Molecule:
    if fields:
        lineno, _ = next(iter(fields.values()))
        raise ConfigError(f"line {lineno}: molecules only accept "
                          f"'transition' lines")
    if not transitions:
        raise ConfigError(f"[molecule:{name}] (line {header_line}): needs at "
                          f"least one transition line")
    parsed = []
    for lineno, value in transitions:
        parts = value.split()
        if len(parts) != 2:
            raise ConfigError(f"line {lineno}: transition needs exactly "
                              f"'omega d_squared'")
        try:
            omega, d2 = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
        if omega <= 0 or d2 <= 0:
            raise ConfigError(f"line {lineno}: transition values must be "
                              f"positive")
        parsed.append(Transition(omega=omega, d_squared=d2))
    parsed.sort(key=lambda t: t.omega)
    return Molecule(name=name, transitions=tuple(parsed))


def _build_material(name, fields, header_line) -> PermittivityModel:
    model = _require(fields, "model", "material", name, header_line).lower()
    try:
        if model == "drude":
            return Drude(
                plasma_frequency=float(_require(fields, "plasma_frequency",
                                                "material", name, header_line)),
                damping=float(_require(fields, "damping", "material", name,
                                       header_line)))
        if model == "constant":
            eps_imag = float(fields.get("eps_imag", (0, "0"))[1])
            return ConstantLossy(
                eps_real=float(_require(fields, "eps_real", "material", name,
                                        header_line)),
                eps_imag=eps_imag)
        if model == "vacuum":
            return Vacuum()
    except ValueError as exc:
        raise ConfigError(f"[material:{name}] (line {header_line}): {exc}") \
            from None
    raise ConfigError(f"[material:{name}] (line {header_line}): unknown "
                      f"model {model!r}")


def _build_mirror(name, fields, header_line, materials) -> MirrorSpec:
    kind = _require(fields, "type", "mirror", name, header_line).lower()

    def material(key):
        mat_name = _require(fields, key, "mirror", name, header_line)
        if mat_name not in materials:
            raise ConfigError(f"[mirror:{name}] (line {header_line}): "
                              f"unknown material {mat_name!r}")
        return materials[mat_name]

    try:
        if kind == "halfspace":
            return HalfSpace(material("material"))
        if kind == "constant_r":
            return ConstantR(r=float(_require(fields, "r", "mirror", name,
                                              header_line)))
        if kind == "quarter_wave":
            return Stack(quarter_wave_stack(
                material("material_a"), material("material_b"),
                int(_require(fields, "pairs", "mirror", name, header_line)),
                float(_require(fields, "design_frequency", "mirror", name,
                               header_line))))
    except ValueError as exc:
        raise ConfigError(f"[mirror:{name}] (line {header_line}): {exc}") \
            from None
    raise ConfigError(f"[mirror:{name}] (line {header_line}): unknown type "
                      f"{kind!r}")


def load_registry(text: str = "") -> Registry:
    """Parse a config string into a registry, on top of the built-ins."""
    reg = Registry()
    for kind, name, fields, transitions, header_line in _parse_sections(text):
        if kind == "molecule":
            target, built = reg.molecules, _build_molecule(
                name, fields, transitions, header_line)
        elif kind == "material":
            target, built = reg.materials, _build_material(
                name, fields, header_line)
        else:
            target, built = reg.mirrors, _build_mirror(
                name, fields, header_line, reg.materials)
        if name in target:
            warnings.warn(f"config overrides built-in {kind} {name!r}")
        target[name] = built
    return reg

"""Registries of personas, logic systems, ethics systems, and the three
calibration scales, loaded from editable JSON resource files.

Registries are immutable after load. Singleton bands (lo == hi) own their
point; otherwise a band covers (lo, hi] so shared endpoints belong to the
lower band.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

PERSONA_KEYS = (
    "empiricist", "rationalist", "skeptic", "pragmatist", "bayesian",
    "constructivist", "phenomenologist", "nihilist", "panpsychist",
    "simulationist", "supernaturalist", "synthesist",
)
LOGIC_KEYS = (
    "none_pure_ethics", "classical_informal_bayesian",
    "classical_formal_deductive", "bayesian", "dialectical",
    "informal_critical", "fuzzy_multivalued", "paraconsistent",
)
ETHICS_KEYS = (
    "none_pure_logic", "utilitarian", "deontological", "virtue", "care",
    "balanced_rule_utilitarian",
)
DEFAULT_LOGIC_SYSTEM = "classical_informal_bayesian"


class RegistryError(ValueError):
    pass


@dataclass(frozen=True)
class PersonaSpec:
    key: str
    display_name: str
    core_commitment: str
    prompt_text: str


@dataclass(frozen=True)
class LogicSystemSpec:
    key: str
    display_name: str
    description: str
    prompt_text: str
    default: bool = False


@dataclass(frozen=True)
class EthicsSystemSpec:
    key: str
    display_name: str
    description: str
    prompt_text: str


@dataclass(frozen=True)
class ScaleBand:
    lo: float
    hi: float
    label: str
    interpretation: str

    @property
    def singleton(self) -> bool:
        return self.lo == self.hi

    def contains(self, s: float) -> bool:
        if self.singleton:
            return s == self.lo
        return self.lo < s <= self.hi


@dataclass(frozen=True)
class Scale:
    name: str
    bands: tuple[ScaleBand, ...]

    def label(self, s: float) -> str:
        if not (0.0 <= s <= 1.0):
            raise ValueError(f"scale value {s} outside [0, 1]")
        # Singletons own their exact point; shared endpoints otherwise
        # fall to the lower band because bands are (lo, hi].
        for band in self.bands:
            if band.singleton and band.contains(s):
                return band.label
        for band in self.bands:
            if not band.singleton and band.contains(s):
                return band.label
        raise RegistryError(f"scale {self.name}: no band contains {s}")


@dataclass(frozen=True)
class Registry:
    personas: dict[str, PersonaSpec]
    logic_systems: dict[str, LogicSystemSpec]
    ethics_systems: dict[str, EthicsSystemSpec]
    strength_scale: Scale
    logic_scale: Scale
    ethics_scale: Scale


def _read_json(path: Path, name: str) -> dict:
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise RegistryError(f"cannot load {name} registry: {exc}") from exc


def _check_scale(scale: Scale) -> None:
    """Bands must cover [0,1] without gaps or overlaps."""
    points = sorted({b.lo for b in scale.bands} | {b.hi for b in scale.bands}
                    | {0.0, 1.0})
    probes = [0.0, 1.0]
    for a, b in zip(points, points[1:]):
        probes.append((a + b) / 2)
        probes.append(b)
    for s in probes:
        owners = [band for band in scale.bands if band.contains(s)]
        singleton_owners = [b for b in owners if b.singleton]
        effective = singleton_owners or owners
        if not effective:
            raise RegistryError(f"scale gap: {scale.name} has no band at {s}")
        if len(effective) > 1:
            raise RegistryError(
                f"scale overlap: {scale.name} has {len(effective)} bands at {s}")


def _parse_scale(name: str, raw: list) -> Scale:
    bands = tuple(
        ScaleBand(lo=float(b["lo"]), hi=float(b["hi"]), label=b["label"],
                  interpretation=b["interpretation"])
        for b in raw
    )
    scale = Scale(name=name, bands=bands)
    _check_scale(scale)
    return scale


def bundled_resource_path() -> Path:
    return Path(str(resources.files("dialectic") / "resources"))


def load_registry(resource_path: Optional[str | Path] = None) -> Registry:
    root = Path(resource_path) if resource_path else bundled_resource_path()
    personas_raw = _read_json(root / "personas.json", "persona")
    missing = sorted(set(PERSONA_KEYS) - set(personas_raw))
    if missing:
        raise RegistryError(f"incomplete persona set: missing {', '.join(missing)}")
    personas = {
        key: PersonaSpec(key=key, **spec) for key, spec in personas_raw.items()
    }
    logic_raw = _read_json(root / "logic_systems.json", "logic system")
    missing = sorted(set(LOGIC_KEYS) - set(logic_raw))
    if missing:
        raise RegistryError(
            f"incomplete logic system set: missing {', '.join(missing)}")
    logic = {
        key: LogicSystemSpec(key=key, **spec) for key, spec in logic_raw.items()
    }
    defaults = [k for k, v in logic.items() if v.default]
    if defaults != [DEFAULT_LOGIC_SYSTEM]:
        raise RegistryError(
            f"exactly {DEFAULT_LOGIC_SYSTEM} must be marked default")
    ethics_raw = _read_json(root / "ethics_systems.json", "ethics system")
    missing = sorted(set(ETHICS_KEYS) - set(ethics_raw))
    if missing:
        raise RegistryError(
            f"incomplete ethics system set: missing {', '.join(missing)}")
    ethics = {
        key: EthicsSystemSpec(key=key, **spec) for key, spec in ethics_raw.items()
    }
    scales_raw = _read_json(root / "scales.json", "scales")
    return Registry(
        personas=personas,
        logic_systems=logic,
        ethics_systems=ethics,
        strength_scale=_parse_scale("strength_scale",
                                    scales_raw["strength_scale"]),
        logic_scale=_parse_scale("logic_scale", scales_raw["logic_scale"]),
        ethics_scale=_parse_scale("ethics_scale", scales_raw["ethics_scale"]),
    )


_DEFAULT_REGISTRY: Optional[Registry] = None


def default_registry() -> Registry:
    global _DEFAULT_REGISTRY
    if _DEFAULT_REGISTRY is None:
        _DEFAULT_REGISTRY = load_registry()
    return _DEFAULT_REGISTRY


def label_strength(s: float) -> str:
    return default_registry().strength_scale.label(s)

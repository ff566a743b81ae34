"""
Walk configuration: enumerations, the validated WalkConfig value and loading
it from YAML or TOML files.
"""

import logging
import cmath
import math
from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml

try:
    import tomllib
except ImportError:
    # For Python < 3.11
    import tomli as tomllib

from .errors import ConfigError

logger = logging.getLogger(__name__)

SQRT_HALF = 1.0 / math.sqrt(2.0)
NORM_TOLERANCE = 1e-12


class WalkKind(str, Enum):
    HADAMARD = "hadamard"
    COINLESS = "coinless-reduced"
    EXTENDED = "extended"
    PAIR = "pair"
    BEC = "bec"
    CLASSICAL = "classical"

    @property
    def is_pair(self) -> bool:
        return self in (WalkKind.PAIR, WalkKind.BEC)


class SignVariant(str, Enum):
    """The ± of the reduced shift operator."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> float:
        return 1.0 if self is SignVariant.PLUS else -1.0


class BecStay(str, Enum):
    """Coefficient of the no-displacement term of the BEC local operators.

    LITERAL keeps ``2/sqrt(4) = 1``; BALANCED uses ``sqrt(2)/sqrt(4)``, which
    keeps each local operator norm-preserving on point states and gives the
    co-located pair the 1 : 1 : 2 weights of the constrained first step.
    """

    LITERAL = "literal"
    BALANCED = "balanced"

    @property
    def coefficient(self) -> float:
        return 1.0 if self is BecStay.LITERAL else SQRT_HALF


class InitialSpec(str, Enum):
    """Named initial coin states, all localized at the origin."""

    ZERO = "zero"
    ONE = "one"
    PLUS = "plus"
    MINUS = "minus"
    PLUS_I = "plus-i"
    PSI_PLUS = "psi-plus"
    PSI_MINUS = "psi-minus"
    PHI_PLUS = "phi-plus"
    PHI_MINUS = "phi-minus"
    PSI_I = "psi-i"

    @property
    def is_pair(self) -> bool:
        return self.value.startswith(("psi", "phi"))

    def coin_amplitudes(self) -> tuple[complex, complex]:
        """Coin vector (a0, a1) of a single-particle spec."""
        try:
            return _SINGLE_COINS[self]
        except KeyError:
            raise ConfigError(f"{self.value} is a pair state, not a single coin state") from None

    def pair_amplitudes(self) -> dict[tuple[int, int], complex]:
        """Non-zero coin amplitudes {(c1, c2): amp} of a pair spec."""
        try:
            return dict(_PAIR_COINS[self])
        except KeyError:
            raise ConfigError(f"{self.value} is a single coin state, not a pair state") from None


_SINGLE_COINS = {
    InitialSpec.ZERO: (1.0 + 0j, 0j),
    InitialSpec.ONE: (0j, 1.0 + 0j),
    InitialSpec.PLUS: (SQRT_HALF + 0j, SQRT_HALF + 0j),
    InitialSpec.MINUS: (SQRT_HALF + 0j, -SQRT_HALF + 0j),
    InitialSpec.PLUS_I: (SQRT_HALF + 0j, 1j * SQRT_HALF),
}

_PAIR_COINS = {
    InitialSpec.PSI_PLUS: {(0, 1): SQRT_HALF + 0j, (1, 0): SQRT_HALF + 0j},
    InitialSpec.PSI_MINUS: {(0, 1): SQRT_HALF + 0j, (1, 0): -SQRT_HALF + 0j},
    InitialSpec.PHI_PLUS: {(0, 0): SQRT_HALF + 0j, (1, 1): SQRT_HALF + 0j},
    InitialSpec.PHI_MINUS: {(0, 0): SQRT_HALF + 0j, (1, 1): -SQRT_HALF + 0j},
    InitialSpec.PSI_I: {(0, 1): SQRT_HALF + 0j, (1, 0): 1j * SQRT_HALF},
}

_DEFAULT_INITIAL = {
    WalkKind.HADAMARD: InitialSpec.PLUS_I,
    WalkKind.COINLESS: InitialSpec.PLUS,
    WalkKind.EXTENDED: InitialSpec.PLUS,
    WalkKind.PAIR: InitialSpec.PSI_I,
    WalkKind.BEC: InitialSpec.PSI_I,
    WalkKind.CLASSICAL: InitialSpec.ZERO,
}


@dataclass(frozen=True)
class WalkConfig:
    """Everything needed to reproduce one walk run."""

    kind: WalkKind = WalkKind.HADAMARD
    steps: int = 0
    sign: SignVariant = SignVariant.PLUS
    initial: Optional[InitialSpec] = None
    normalize_each_step: bool = True
    ancilla_amplitudes: tuple[complex, complex] = (SQRT_HALF + 0j, SQRT_HALF + 0j)
    bec_stay: BecStay = BecStay.BALANCED
    origin: int = 0
    separation: int = 0

    def __post_init__(self):
        # Accept plain strings for the enum fields
        for name, enum_type in (("kind", WalkKind), ("sign", SignVariant), ("bec_stay", BecStay)):
            object.__setattr__(self, name, coerce_enum(enum_type, getattr(self, name), name))
        initial = self.initial if self.initial is not None else _DEFAULT_INITIAL[self.kind]
        object.__setattr__(self, "initial", coerce_enum(InitialSpec, initial, "initial"))

        if isinstance(self.steps, bool) or not isinstance(self.steps, int):
            raise ConfigError(f"steps must be an integer (got {self.steps!r})")
        if self.steps < 0:
            raise ConfigError(f"steps must be non-negative (got {self.steps})")
        if not isinstance(self.normalize_each_step, bool):
            raise ConfigError("normalize_each_step must be a boolean")
        if not isinstance(self.origin, int) or not isinstance(self.separation, int):
            raise ConfigError("origin and separation must be integers")

        if self.kind.is_pair != self.initial.is_pair:
            expected = "a pair" if self.kind.is_pair else "a single-particle"
            raise ConfigError(f"walk kind {self.kind.value} needs {expected} initial state, got {self.initial.value}")
        if self.separation and self.kind is not WalkKind.PAIR:
            raise ConfigError("separation is only meaningful for the pair walk")

        try:
            ancilla = tuple(complex(a) for a in self.ancilla_amplitudes)
        except (TypeError, ValueError):
            raise ConfigError(f"cannot read ancilla amplitudes {self.ancilla_amplitudes!r}") from None
        if len(ancilla) != 2:
            raise ConfigError("ancilla_amplitudes must hold exactly two amplitudes")
        if not all(cmath.isfinite(a) for a in ancilla):
            raise ConfigError(f"ancilla amplitudes must be finite (got {ancilla!r})")
        weight = abs(ancilla[0]) ** 2 + abs(ancilla[1]) ** 2
        if abs(weight - 1.0) > NORM_TOLERANCE:
            raise ConfigError(f"ancilla amplitudes must have squared moduli summing to 1 (got {weight!r})")
        object.__setattr__(self, "ancilla_amplitudes", ancilla)

    def with_overrides(self, **overrides: Any) -> "WalkConfig":
        """Copy with the given fields replaced, skipping ``None`` values."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if "kind" in changes and "initial" not in changes and self.kind != coerce_enum(WalkKind, changes["kind"], "kind"):
            # The previous default initial state may not suit the new kind
            if self.initial == _DEFAULT_INITIAL[self.kind]:
                changes["initial"] = None
        return replace(self, **changes)


def coerce_enum(enum_type, value, name):
    if isinstance(value, enum_type):
        return value
    try:
        return enum_type(value)
    except ValueError:
        choices = ", ".join(member.value for member in enum_type)
        raise ConfigError(f"invalid {name} {value!r}; expected one of: {choices}") from None


def _parse_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ConfigError(f"complex amplitudes are written as [re, im], got {value!r}")
        try:
            return complex(float(value[0]), float(value[1]))
        except (TypeError, ValueError):
            raise ConfigError(f"cannot read complex amplitude {value!r}") from None
    if isinstance(value, str):
        try:
            return complex(value.replace(" ", ""))
        except ValueError:
            raise ConfigError(f"cannot read complex amplitude {value!r}") from None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    raise ConfigError(f"cannot read complex amplitude {value!r}")


def config_from_mapping(data: Mapping[str, Any]) -> WalkConfig:
    """Build a WalkConfig from plain data (as read from a config file)."""
    known = {f.name for f in fields(WalkConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")

    values = dict(data)
    if "ancilla_amplitudes" in values:
        raw = values["ancilla_amplitudes"]
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise ConfigError("ancilla_amplitudes must be a list of two amplitudes")
        values["ancilla_amplitudes"] = tuple(_parse_complex(a) for a in raw)
    return WalkConfig(**values)


def load_config(filepath: str | Path) -> WalkConfig:
    """
    Reads a WalkConfig from a YAML (.yaml/.yml) or TOML (.toml) file.

    Args:
        filepath: Path of the configuration file.

    Raises:
        ConfigError: If the file cannot be read, parsed or validated.
    """
    path = Path(filepath)
    suffix = path.suffix.lower()
    try:
        if suffix in (".yaml", ".yml"):
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        elif suffix == ".toml":
            with open(path, "rb") as f:
                data = tomllib.load(f)
        else:
            raise ConfigError(f"unsupported configuration format {suffix!r} (use .yaml, .yml or .toml)")
    except FileNotFoundError:
        raise ConfigError(f"configuration file not found at {path}") from None
    except (yaml.YAMLError, tomllib.TOMLDecodeError) as e:
        raise ConfigError(f"cannot parse configuration file {path}: {e}") from None
    except OSError as e:
        raise ConfigError(f"cannot read configuration file {path}: {e}") from None

    if not isinstance(data, Mapping):
        raise ConfigError(f"configuration file {path} must hold a mapping at top level")
    config = config_from_mapping(data)
    logger.info("loaded %s walk configuration from %s", config.kind.value, path)
    return config

"""Tests for WalkConfig and configuration loading"""

import pytest

from qwalk.models.config import (
    SQRT_HALF,
    BecStay,
    InitialSpec,
    SignVariant,
    WalkConfig,
    WalkKind,
    config_from_mapping,
    load_config,
)
from qwalk.models.errors import ConfigError, QuantumWalkError


def test_default_initial_state_per_kind():
    """Test the initial state chosen when none is given"""
    assert WalkConfig(kind="hadamard").initial is InitialSpec.PLUS_I
    assert WalkConfig(kind="coinless-reduced").initial is InitialSpec.PLUS
    assert WalkConfig(kind="pair").initial is InitialSpec.PSI_I
    assert WalkConfig(kind="bec").initial is InitialSpec.PSI_I
    assert WalkConfig(kind="classical").initial is InitialSpec.ZERO


def test_strings_are_coerced_to_enums():
    config = WalkConfig(kind="pair", sign="minus", initial="phi-plus", bec_stay="literal")
    assert config.kind is WalkKind.PAIR
    assert config.sign is SignVariant.MINUS
    assert config.initial is InitialSpec.PHI_PLUS
    assert config.bec_stay is BecStay.LITERAL


def test_enum_properties():
    assert SignVariant.MINUS.factor == -1.0
    assert BecStay.LITERAL.coefficient == 1.0
    assert BecStay.BALANCED.coefficient == pytest.approx(SQRT_HALF)
    assert WalkKind.BEC.is_pair
    assert not WalkKind.EXTENDED.is_pair
    assert InitialSpec.PSI_I.is_pair
    assert not InitialSpec.MINUS.is_pair


def test_pair_amplitudes_are_copies():
    amplitudes = InitialSpec.PSI_I.pair_amplitudes()
    amplitudes[(0, 0)] = 1.0
    assert (0, 0) not in InitialSpec.PSI_I.pair_amplitudes()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"steps": -1},
        {"steps": 2.5},
        {"steps": True},
        {"kind": "spiral"},
        {"sign": "both"},
        {"kind": "pair", "initial": "plus"},
        {"kind": "hadamard", "initial": "psi-i"},
        {"kind": "bec", "separation": 1},
        {"normalize_each_step": "yes"},
        {"ancilla_amplitudes": (1.0, 1.0)},
        {"ancilla_amplitudes": (1.0,)},
        {"ancilla_amplitudes": (float("nan"), 0.0)},
        {"ancilla_amplitudes": (complex("inf"), 0.0)},
        {"ancilla_amplitudes": ("x", 0.0)},
    ],
)
def test_invalid_config_raises(kwargs):
    with pytest.raises(ConfigError):
        WalkConfig(**kwargs)


def test_config_error_is_value_error():
    """Test that ConfigError fits both exception hierarchies"""
    assert issubclass(ConfigError, QuantumWalkError)
    assert issubclass(ConfigError, ValueError)


def test_with_overrides_skips_none():
    config = WalkConfig(kind="coinless-reduced", steps=4, sign="minus")
    updated = config.with_overrides(steps=None, sign=None, normalize_each_step=False)
    assert updated.steps == 4
    assert updated.sign is SignVariant.MINUS
    assert updated.normalize_each_step is False


def test_with_overrides_resets_default_initial_on_kind_change():
    config = WalkConfig(kind="hadamard").with_overrides(kind=WalkKind.PAIR)
    assert config.initial is InitialSpec.PSI_I


def test_with_overrides_keeps_explicit_initial_on_kind_change():
    config = WalkConfig(kind="hadamard", initial="zero").with_overrides(kind="coinless-reduced")
    assert config.initial is InitialSpec.ZERO


def test_config_from_mapping_reads_ancilla_pairs():
    config = config_from_mapping(
        {"kind": "extended", "steps": 3, "ancilla_amplitudes": [[0.6, 0.0], [0.0, 0.8]]}
    )
    assert config.ancilla_amplitudes == (0.6 + 0j, 0.8j)


@pytest.mark.parametrize("pair", [["x", 0], [None, 0], [0.5, "1j"]])
def test_config_from_mapping_rejects_unreadable_amplitudes(pair):
    with pytest.raises(ConfigError, match="cannot read complex amplitude"):
        config_from_mapping({"kind": "extended", "ancilla_amplitudes": [pair, [0, 1]]})


def test_config_from_mapping_rejects_unknown_keys():
    with pytest.raises(ConfigError, match="unknown configuration keys: colour"):
        config_from_mapping({"kind": "pair", "colour": "blue"})


def test_load_yaml_config(tmp_path):
    """Test loading a configuration from a YAML file"""
    path = tmp_path / "walk.yaml"
    path.write_text("kind: bec\nsteps: 7\nbec_stay: literal\n", encoding="utf-8")
    config = load_config(path)
    assert config.kind is WalkKind.BEC
    assert config.steps == 7
    assert config.bec_stay is BecStay.LITERAL
    assert config.initial is InitialSpec.PSI_I


def test_load_toml_config(tmp_path):
    """Test loading a configuration from a TOML file"""
    path = tmp_path / "walk.toml"
    path.write_text('kind = "pair"\nsteps = 3\nseparation = 2\nnormalize_each_step = false\n', encoding="utf-8")
    config = load_config(str(path))
    assert config.kind is WalkKind.PAIR
    assert config.separation == 2
    assert config.normalize_each_step is False


def test_load_config_errors(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "missing.yaml")

    unsupported = tmp_path / "walk.ini"
    unsupported.write_text("kind=pair", encoding="utf-8")
    with pytest.raises(ConfigError, match="unsupported"):
        load_config(unsupported)

    broken = tmp_path / "broken.toml"
    broken.write_text("kind = ", encoding="utf-8")
    with pytest.raises(ConfigError, match="cannot parse"):
        load_config(broken)

    listing = tmp_path / "list.yaml"
    listing.write_text("- pair\n- bec\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="mapping"):
        load_config(listing)


def test_empty_yaml_gives_defaults(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("", encoding="utf-8")
    assert load_config(path) == WalkConfig()

"""Tests for the amplitude states and initial-state construction"""

import math

import numpy as np
import pytest

from qwalk.models.config import SQRT_HALF, InitialSpec
from qwalk.models.errors import ConfigError, NonFiniteAmplitudeError, ZeroNormError
from qwalk.models.lattice import Lattice
from qwalk.models.states import (
    ExtendedState,
    PairState,
    SingleState,
    make_initial,
    norm,
    normalize,
)


@pytest.fixture
def lattice():
    return Lattice(3)


def test_state_shapes(lattice):
    """Test the amplitude layout of each state kind"""
    assert SingleState.zeros(lattice).amp.shape == (2, 7)
    assert ExtendedState.zeros(lattice).amp.shape == (2, 2, 7)
    assert PairState.zeros(lattice).amp.shape == (2, 2, 7, 7)


def test_state_rejects_wrong_shape(lattice):
    with pytest.raises(ValueError):
        SingleState(lattice, np.zeros((2, 5)))


@pytest.mark.parametrize("bad", [np.nan, np.inf, complex(0, -np.inf)])
def test_state_rejects_non_finite(lattice, bad):
    amp = np.zeros((2, 7), dtype=complex)
    amp[0, 3] = bad
    with pytest.raises(NonFiniteAmplitudeError):
        SingleState(lattice, amp)


def test_state_amplitudes_are_read_only(lattice):
    state = make_initial("zero", lattice)
    with pytest.raises(ValueError):
        state.amp[0, 0] = 1.0


def test_state_copies_input_array(lattice):
    """Test that mutating the source array does not change the state"""
    amp = np.zeros((2, 7), dtype=complex)
    amp[0, 3] = 1.0
    state = SingleState(lattice, amp)
    amp[0, 3] = 5.0
    assert state.amplitude(0, 0) == 1.0


def test_make_initial_single(lattice):
    state = make_initial(InitialSpec.PLUS_I, lattice)
    assert isinstance(state, SingleState)
    assert state.amplitude(0, 0) == pytest.approx(SQRT_HALF)
    assert state.amplitude(1, 0) == pytest.approx(1j * SQRT_HALF)
    assert norm(state) == pytest.approx(1.0, abs=1e-15)


def test_make_initial_extended(lattice):
    """Test that the ancilla register is attached as a product state"""
    state = make_initial("one", lattice, ancilla_amplitudes=(SQRT_HALF, -SQRT_HALF))
    assert isinstance(state, ExtendedState)
    assert state.amplitude(1, 0, 0) == pytest.approx(SQRT_HALF)
    assert state.amplitude(1, 1, 0) == pytest.approx(-SQRT_HALF)
    assert state.amplitude(0, 0, 0) == 0


def test_make_initial_pair(lattice):
    state = make_initial("psi-i", lattice)
    assert isinstance(state, PairState)
    assert state.amplitude(0, 1, 0, 0) == pytest.approx(SQRT_HALF)
    assert state.amplitude(1, 0, 0, 0) == pytest.approx(1j * SQRT_HALF)
    assert state.amplitude(0, 0, 0, 0) == 0
    assert norm(state) == pytest.approx(1.0, abs=1e-15)


def test_make_initial_pair_with_separation(lattice):
    state = make_initial("phi-minus", lattice, separation=2)
    assert state.amplitude(0, 0, 0, 2) == pytest.approx(SQRT_HALF)
    assert state.amplitude(1, 1, 0, 2) == pytest.approx(-SQRT_HALF)


def test_make_initial_at_shifted_origin():
    lattice = Lattice(2, origin=10)
    state = make_initial("zero", lattice)
    assert state.amplitude(0, 10) == 1.0


def test_make_initial_rejects_bad_requests(lattice):
    with pytest.raises(ConfigError):
        make_initial("bogus", lattice)
    with pytest.raises(ConfigError):
        make_initial("psi-i", lattice, ancilla_amplitudes=(1, 0))
    with pytest.raises(ConfigError):
        make_initial("psi-i", lattice, separation=10)
    with pytest.raises(ConfigError):
        make_initial("zero", lattice, separation=1)


def test_normalize_returns_prior_norm(lattice):
    amp = np.zeros((2, 7), dtype=complex)
    amp[0, 3] = 3.0
    amp[1, 3] = 4.0j
    state, prior = normalize(SingleState(lattice, amp))
    assert prior == pytest.approx(5.0)
    assert state.norm() == pytest.approx(1.0, abs=1e-15)
    assert state.amplitude(1, 0) == pytest.approx(0.8j)


def test_normalize_keeps_unit_state(lattice):
    state = make_initial("zero", lattice)
    same, prior = normalize(state)
    assert same is state
    assert prior == 1.0


def test_normalize_zero_state_raises(lattice):
    with pytest.raises(ZeroNormError):
        normalize(PairState.zeros(lattice))


def test_pair_state_norm_counts_every_sector(lattice):
    amp = np.zeros((2, 2, 7, 7), dtype=complex)
    amp[0, 0, 1, 2] = 1.0
    amp[1, 1, 4, 4] = 1.0
    assert PairState(lattice, amp).norm() == pytest.approx(math.sqrt(2.0))


def test_normalize_is_idempotent(lattice):
    """Test that normalizing twice gives the same state and a unit prior norm"""
    rng = np.random.default_rng(11)
    amp = rng.normal(size=(2, 2, 7, 7)) + 1j * rng.normal(size=(2, 2, 7, 7))
    once, first_prior = normalize(PairState(lattice, amp))
    twice, second_prior = normalize(once)
    assert first_prior > 1.0
    assert second_prior == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(twice.amp, once.amp, atol=1e-15)

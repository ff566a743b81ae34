"""Tests for the brute-force path sums"""

import numpy as np
import pytest

from qwalk.models.config import SQRT_HALF, WalkConfig
from qwalk.models.errors import TooManyStepsError
from qwalk.models.lattice import Lattice
from qwalk.operators.single import run_single
from qwalk.oracle.paths import MAX_PATH_STEPS, enumerate_paths

TOL = 1e-12

KIND_NAMES = {"hadamard": "hadamard", "coinless": "coinless-reduced", "extended": "extended"}


@pytest.mark.parametrize("steps", [1, 2, 5, 10])
@pytest.mark.parametrize(
    "kind, initial, sign",
    [
        ("hadamard", "plus-i", "plus"),
        ("hadamard", "zero", "plus"),
        ("coinless", "plus", "plus"),
        ("coinless", "plus-i", "minus"),
        ("extended", "plus", "plus"),
    ],
)
def test_paths_match_step_operators(kind, initial, sign, steps):
    """Test the path sum against the unnormalized step operator"""
    config = WalkConfig(kind=KIND_NAMES[kind], steps=steps, initial=initial, sign=sign, normalize_each_step=False)
    state = run_single(config).state
    paths = enumerate_paths(kind, sign, steps, initial).to_state(state.lattice)
    np.testing.assert_allclose(paths.amp, state.amp, atol=TOL)


def test_hadamard_two_step_path_counts():
    """Test the exact signed path counts of two Hadamard steps from |0>"""
    paths = enumerate_paths("hadamard", "plus", 2, "zero")
    assert paths.scale == pytest.approx(0.5)
    assert paths.weights == {
        ((0,), (0,), -2): 1,
        ((0,), (1,), 0): 1,
        ((0,), (0,), 0): 1,
        ((0,), (1,), 2): -1,
    }
    assert paths.coefficient((0,), (1,), 2) == pytest.approx(-0.5)


def test_coinless_minus_sign_path_counts():
    """Test the signed path counts of (L - R)^2 for coin 0"""
    paths = enumerate_paths("coinless", "minus", 2, "zero")
    assert paths.weights[(0,), (0,), 0] == -2
    assert paths.weights[(0,), (0,), -2] == 1
    assert paths.weights[(0,), (0,), 2] == 1


def test_extended_paths_are_single_branches():
    paths = enumerate_paths("extended", "plus", 3, "one", ancilla_amplitudes=(1.0, 0.0))
    assert paths.scale == 1.0
    assert paths.amplitudes() == {((1, 0), 3): 1.0}


def test_paths_at_shifted_origin():
    paths = enumerate_paths("coinless", "plus", 1, "plus", origin=5)
    amplitudes = paths.amplitudes()
    assert amplitudes[(0,), 4] == pytest.approx(0.5)
    assert amplitudes[(1,), 6] == pytest.approx(0.5)
    state = paths.to_state(Lattice(1, origin=5))
    assert state.amplitude(1, 4) == pytest.approx(SQRT_HALF * SQRT_HALF)


def test_path_enumeration_limits():
    with pytest.raises(TooManyStepsError):
        enumerate_paths("hadamard", "plus", MAX_PATH_STEPS + 1, "zero")
    with pytest.raises(ValueError):
        enumerate_paths("pair", "plus", 1, "psi-i")

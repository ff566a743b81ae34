"""
Seeded sampling of measurement outcomes from exact distributions.

A single-particle run registers one position. A pair run registers one
position when both particles are found on the same site and two when they
are found apart.
"""

import numpy as np
from numpy.typing import NDArray

from .distributions import Distribution, JointDistribution, runs_required

DEFAULT_SEED = 20070101


def make_rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _probabilities(p: NDArray) -> NDArray:
    flat = np.clip(np.asarray(p, dtype=np.float64).ravel(), 0.0, None)
    return flat / flat.sum()


def sample_positions(d: Distribution, samples: int, rng: np.random.Generator) -> NDArray[np.int64]:
    """Draw ``samples`` positions from ``d``."""
    if samples < 0:
        raise ValueError(f"samples must be non-negative (got {samples})")
    idx = rng.choice(d.lattice.size, size=samples, p=_probabilities(d.p))
    return d.positions[idx]


def sample_joint(j: JointDistribution, samples: int, rng: np.random.Generator) -> NDArray[np.int64]:
    """Draw ``samples`` (x1, x2) outcomes from ``j``; shape (samples, 2)."""
    if samples < 0:
        raise ValueError(f"samples must be non-negative (got {samples})")
    size = j.lattice.size
    flat = rng.choice(size * size, size=samples, p=_probabilities(j.p))
    i1, i2 = np.divmod(flat, size)
    return np.stack([j.positions[i1], j.positions[i2]], axis=1)


def registered_points(outcomes: NDArray) -> int:
    """Position points registered by a batch of runs.

    ``outcomes`` is either a 1-D array of single-particle positions or the
    (runs, 2) array returned by ``sample_joint``.
    """
    outcomes = np.asarray(outcomes)
    if outcomes.ndim == 1:
        return int(outcomes.shape[0])
    separated = np.count_nonzero(outcomes[:, 0] != outcomes[:, 1])
    return int(outcomes.shape[0] + separated)


def sampling_summary(outcomes: NDArray) -> dict[str, int]:
    """Runs, registered points and the run-count estimate for that many points."""
    points = registered_points(outcomes)
    return {
        "samples": int(np.asarray(outcomes).shape[0]),
        "registered_points": points,
        "runs_required": runs_required(points),
    }

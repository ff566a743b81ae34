"""
Position statistics of walk states: single-particle and joint distributions,
marginals, coincidence probabilities, spreading and the run-count estimate.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from ..models.errors import NotNormalizedError
from ..models.lattice import Lattice
from ..models.states import AmplitudeState, ExtendedState, PairState, SingleState

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability mass over lattice sites"""

    lattice: Lattice
    p: NDArray[np.float64] = field(repr=False)

    def __post_init__(self):
        p = np.array(self.p, dtype=np.float64)
        if p.shape != (self.lattice.size,):
            raise ValueError(f"distribution needs shape {(self.lattice.size,)}, got {p.shape}")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

    @property
    def positions(self) -> NDArray[np.int64]:
        return self.lattice.positions

    def total(self) -> float:
        return float(self.p.sum())

    def probability(self, x: int) -> float:
        return float(self.p[self.lattice.index(x)])

    def mean(self) -> float:
        return float(np.dot(self.p, self.positions))

    def peak_position(self) -> int:
        """Site of maximum probability (the leftmost one on ties)."""
        return int(self.positions[int(np.argmax(self.p))])

    def as_dict(self, include_zero: bool = False) -> dict[int, float]:
        return {int(x): float(q) for x, q in zip(self.positions, self.p) if include_zero or q != 0.0}


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Probability mass over pairs of lattice sites, indexed p[x1, x2]"""

    lattice: Lattice
    p: NDArray[np.float64] = field(repr=False)

    def __post_init__(self):
        p = np.array(self.p, dtype=np.float64)
        size = self.lattice.size
        if p.shape != (size, size):
            raise ValueError(f"joint distribution needs shape {(size, size)}, got {p.shape}")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

    @property
    def positions(self) -> NDArray[np.int64]:
        return self.lattice.positions

    def total(self) -> float:
        return float(self.p.sum())

    def probability(self, x1: int, x2: int) -> float:
        return float(self.p[self.lattice.index(x1), self.lattice.index(x2)])

    def diagonal(self) -> Distribution:
        """P(x, x) per site; sums to p_same, not to 1."""
        return Distribution(self.lattice, np.diagonal(self.p))


def _require_normalized(state: AmplitudeState) -> None:
    n = state.norm()
    if abs(n - 1.0) > NORMALIZATION_TOLERANCE:
        raise NotNormalizedError(f"{type(state).__name__} has norm {n!r}; normalize it before measuring")


def position_distribution(s: SingleState | ExtendedState) -> Distribution:
    """P(x) summed over coin (and ancilla) labels."""
    if not isinstance(s, (SingleState, ExtendedState)):
        raise TypeError("position_distribution expects a SingleState or ExtendedState")
    _require_normalized(s)
    weights = np.abs(s.amp) ** 2
    p = weights.reshape(-1, s.lattice.size).sum(axis=0)
    return Distribution(s.lattice, p)


def joint_distribution(s: PairState) -> JointDistribution:
    """P(x1, x2) summed over the (c1, c2) coin sectors."""
    if not isinstance(s, PairState):
        raise TypeError("joint_distribution expects a PairState")
    _require_normalized(s)
    p = (np.abs(s.amp) ** 2).sum(axis=(0, 1))
    return JointDistribution(s.lattice, p)


def coin_distribution(s: AmplitudeState) -> NDArray[np.float64]:
    """
    Probability of each coin label: shape (2,) for a SingleState, (2, 2) for
    an ExtendedState (coin, ancilla) or a PairState (c1, c2).
    """
    _require_normalized(s)
    weights = np.abs(s.amp) ** 2
    return weights.sum(axis=tuple(s.position_axes))


def coincidence_probability(j: JointDistribution) -> tuple[float, float]:
    """Probability of finding both particles on the same site, and its complement."""
    p_same = float(np.trace(j.p))
    return p_same, 1.0 - p_same


def marginal(j: JointDistribution, particle: int) -> Distribution:
    """Distribution of one particle, the other summed out."""
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2 (got {particle})")
    axis = 1 if particle == 1 else 0
    return Distribution(j.lattice, j.p.sum(axis=axis))


def variance(d: Distribution) -> float:
    x = d.positions.astype(np.float64)
    mean = float(np.dot(d.p, x))
    return float(np.dot(d.p, x * x)) - mean * mean


def loglog_slope(steps: Sequence[int], variances: Sequence[float]) -> float:
    """
    Least-squares slope of log(variance) against log(steps).

    Points with a non-positive step count or variance are skipped; at least
    two points must remain.
    """
    n = np.asarray(steps, dtype=np.float64)
    v = np.asarray(variances, dtype=np.float64)
    keep = (n > 0) & (v > 0)
    if np.count_nonzero(keep) < 2:
        raise ValueError("a log-log fit needs at least two points with positive steps and variance")
    slope, _ = np.polyfit(np.log(n[keep]), np.log(v[keep]), 1)
    return float(slope)


def runs_required(n_points: int) -> int:
    """Repetitions of an N-step pair walk needed to register ``n_points`` positions.

    With p_same = p_diff = 1/2 each run registers 1.5 positions on average,
    so ceil(2n/3) runs suffice.
    """
    if n_points < 0:
        raise ValueError(f"n_points must be non-negative (got {n_points})")
    return -(-2 * n_points // 3)

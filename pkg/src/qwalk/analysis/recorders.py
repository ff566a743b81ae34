"""Step observers that collect statistics while a walk runs."""

import logging
from typing import Optional

from ..models.states import PairState, normalize
from .distributions import (
    Distribution,
    coincidence_probability,
    joint_distribution,
    position_distribution,
    variance,
)

logger = logging.getLogger(__name__)


def measurable_distribution(state) -> Distribution:
    """Position distribution of a single-particle state or a classical distribution."""
    if isinstance(state, Distribution):
        return state
    normalized, _ = normalize(state)
    return position_distribution(normalized)


class CoincidenceRecorder:
    """Records (step, p_same, p_diff) after every step of a pair walk"""

    def __init__(self):
        self.records: list[tuple[int, float, float]] = []

    def on_step(self, step: int, state: PairState, diagnostic: Optional[float]):
        normalized, _ = normalize(state)
        p_same, p_diff = coincidence_probability(joint_distribution(normalized))
        self.records.append((step, p_same, p_diff))


class VarianceRecorder:
    """Records (step, variance) for every step at or after ``min_steps``"""

    def __init__(self, min_steps: int = 1):
        self.min_steps = min_steps
        self.records: list[tuple[int, float]] = []

    def on_step(self, step: int, state, diagnostic: Optional[float]):
        if step >= self.min_steps:
            self.records.append((step, variance(measurable_distribution(state))))

"""
Brute-force path sums for single-particle walks.

Every N-step walk is a sum over 2^N left/right decision sequences. Each
sequence contributes ±(1/sqrt(2))^N (the extended walk: exactly one path of
weight 1 per branch). The signed path counts are kept as Python integers so
the sums are exact; only the final scaling is floating point.
"""

import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..models.config import SQRT_HALF, InitialSpec, SignVariant, coerce_enum
from ..models.errors import TooManyStepsError
from ..models.lattice import Lattice
from ..models.states import ExtendedState, SingleState

logger = logging.getLogger(__name__)

MAX_PATH_STEPS = 12
PATH_KINDS = ("hadamard", "coinless", "extended")

# Hadamard coin entries are all +1/sqrt(2) except <1|H|1> = -1/sqrt(2)
_HADAMARD_SIGN = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1}


@dataclass(frozen=True)
class PathSum:
    """Exact path sums of one walk.

    ``weights`` maps (start label, end label, x) to the signed number of
    paths from the start basis state to (end label, x); labels are coin
    tuples, (c,) or (c, a) for the extended walk. The amplitude of a final
    basis state is the sum of start amplitude × weight × ``scale``.
    """

    kind: str
    steps: int
    start_amplitudes: dict[tuple[int, ...], complex]
    weights: dict[tuple[tuple[int, ...], tuple[int, ...], int], int] = field(repr=False)

    @property
    def scale(self) -> float:
        return 1.0 if self.kind == "extended" else SQRT_HALF**self.steps

    def coefficient(self, start: tuple[int, ...], end: tuple[int, ...], x: int) -> float:
        """Path sum from one start label to (end, x), times the scale."""
        return self.weights.get((start, end, x), 0) * self.scale

    def amplitudes(self) -> dict[tuple[tuple[int, ...], int], complex]:
        """Final amplitude for every reachable (end label, x)."""
        total: dict[tuple[tuple[int, ...], int], complex] = defaultdict(complex)
        for (start, end, x), w in self.weights.items():
            total[end, x] += self.start_amplitudes[start] * w * self.scale
        return dict(total)

    def to_state(self, lattice: Lattice) -> SingleState | ExtendedState:
        state_type = ExtendedState if self.kind == "extended" else SingleState
        amp = np.zeros(state_type.expected_shape(lattice), dtype=np.complex128)
        for (end, x), a in self.amplitudes().items():
            amp[end + (lattice.index(x),)] = a
        return state_type(lattice, amp)


def _hadamard_paths(coin: int, x0: int, steps: int):
    for choices in itertools.product((0, 1), repeat=steps):
        sign, c, x = 1, coin, x0
        for nxt in choices:
            sign *= _HADAMARD_SIGN[c, nxt]
            x += -1 if nxt == 0 else 1
            c = nxt
        yield c, x, sign


def _coinless_paths(coin: int, x0: int, steps: int, s: int):
    # Coin 0 weights (left, right) = (1, s); coin 1 weights (s, 1)
    weight = {-1: 1, 1: s} if coin == 0 else {-1: s, 1: 1}
    for moves in itertools.product((-1, 1), repeat=steps):
        yield coin, x0 + sum(moves), math.prod(weight[m] for m in moves)


def enumerate_paths(
    kind: str,
    sign: SignVariant,
    steps: int,
    initial: InitialSpec | str,
    *,
    origin: int = 0,
    ancilla_amplitudes: Optional[tuple[complex, complex]] = None,
) -> PathSum:
    """
    Sums every left/right decision sequence of an N-step walk.

    Args:
        kind: "hadamard", "coinless" or "extended".
        sign: Sign variant of the reduced shift (ignored by the other kinds).
        steps: Number of steps N (at most MAX_PATH_STEPS).
        initial: Single-particle initial coin state at ``origin``.
        ancilla_amplitudes: Ancilla state of the extended walk (balanced by default).

    Raises:
        TooManyStepsError: If ``steps`` exceeds MAX_PATH_STEPS.
    """
    if kind not in PATH_KINDS:
        raise ValueError(f"unknown path kind {kind!r}; expected one of: {', '.join(PATH_KINDS)}")
    if steps > MAX_PATH_STEPS:
        raise TooManyStepsError(f"path enumeration is limited to {MAX_PATH_STEPS} steps (got {steps})")
    if steps < 0:
        raise ValueError(f"steps must be non-negative (got {steps})")
    initial = coerce_enum(InitialSpec, initial, "initial")
    s = int(SignVariant(sign).factor)
    coins = initial.coin_amplitudes()

    weights: dict = defaultdict(int)
    start_amplitudes: dict = {}
    if kind == "extended":
        ancilla = ancilla_amplitudes if ancilla_amplitudes is not None else (SQRT_HALF, SQRT_HALF)
        for c, a in itertools.product((0, 1), repeat=2):
            amplitude = complex(coins[c]) * complex(ancilla[a])
            if amplitude == 0:
                continue
            # Coin and ancilla agree: left; disagree: right
            direction = -1 if c == a else 1
            start_amplitudes[c, a] = amplitude
            weights[(c, a), (c, a), origin + direction * steps] += 1
    else:
        for c in (0, 1):
            if coins[c] == 0:
                continue
            start_amplitudes[(c,)] = complex(coins[c])
            paths = _hadamard_paths(c, origin, steps) if kind == "hadamard" else _coinless_paths(c, origin, steps, s)
            for end, x, w in paths:
                weights[(c,), (end,), x] += w

    logger.debug("%s: enumerated %d path classes over %d steps", kind, len(weights), steps)
    return PathSum(kind, steps, start_amplitudes, {k: w for k, w in weights.items() if w != 0})

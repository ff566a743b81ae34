"""
Single-particle step operators.

* the Hadamard coin and the conditional shift of the standard walk,
* the reduced coin-retaining shift, which moves each coin block to a signed
  superposition of both neighbours and never touches the coin label,
* the extended shift on coin ⊗ momentum-ancilla ⊗ position, a basis
  permutation in which the ancilla flips the direction of the coin,
* the classical ±1 random walk on probability vectors.

Projector products in the operator algebra are implemented as sums of the
projector terms; a literal product of orthogonal projectors is zero.
"""

import logging
import math

import numpy as np

from ..analysis.distributions import Distribution
from ..models.config import SignVariant, WalkConfig, WalkKind
from ..models.lattice import Lattice, require_interior, translate
from ..models.states import ExtendedState, SingleState, make_initial, normalize
from .runner import WalkResult, WalkRunner

logger = logging.getLogger(__name__)

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
SQRT2 = math.sqrt(2.0)

LEFT, RIGHT = -1, 1

# Direction taken by each (coin, ancilla) branch of the extended shift
EXTENDED_DIRECTIONS = {(0, 0): LEFT, (0, 1): RIGHT, (1, 0): RIGHT, (1, 1): LEFT}


def hadamard_coin(s: SingleState) -> SingleState:
    """Rotate the coin at every site by H."""
    return s.copy_with(np.tensordot(HADAMARD, s.amp, axes=(1, 0)))


def conditional_shift(s: SingleState) -> SingleState:
    """Coin 0 moves one site left, coin 1 one site right."""
    require_interior(s.amp, axis=1)
    amp = np.empty_like(s.amp)
    amp[0] = translate(s.amp[0], LEFT, axis=0)
    amp[1] = translate(s.amp[1], RIGHT, axis=0)
    return s.copy_with(amp)


def hadamard_walk_step(s: SingleState) -> SingleState:
    return conditional_shift(hadamard_coin(s))


def apply_reduced_shift(amp: np.ndarray, sign: SignVariant, coin_axis: int, position_axis: int) -> np.ndarray:
    """
    Reduced coin-retaining shift on one particle's (coin, position) axes of
    an amplitude array of any rank:

        coin 0:  (L ± R) / sqrt(2)
        coin 1:  (R ± L) / sqrt(2)

    where L (R) moves one site left (right).
    """
    require_interior(amp, axis=position_axis)
    s = sign.factor
    left = translate(amp, LEFT, axis=position_axis)
    right = translate(amp, RIGHT, axis=position_axis)

    out = np.empty_like(amp)
    zero = [slice(None)] * amp.ndim
    one = [slice(None)] * amp.ndim
    zero[coin_axis], one[coin_axis] = 0, 1
    zero, one = tuple(zero), tuple(one)
    # Overflow of unnormalized runs is reported by the state constructor
    with np.errstate(over="ignore", invalid="ignore"):
        out[zero] = (left[zero] + s * right[zero]) / SQRT2
        out[one] = (right[one] + s * left[one]) / SQRT2
    return out


def coinless_step_reduced(
    s: SingleState, sign: SignVariant = SignVariant.PLUS, normalize_each_step: bool = True
) -> tuple[SingleState, float]:
    """
    One step of the reduced coin-retaining walk.

    The operator is not an isometry, so the norm of the image is returned as
    ``prior_norm``; with ``normalize_each_step`` the image is rescaled to 1.

    Raises:
        BoundaryOverflowError: If the state touches the lattice edge.
        ZeroNormError: If the image vanishes (only possible for the minus sign).
    """
    image = s.copy_with(apply_reduced_shift(s.amp, SignVariant(sign), coin_axis=0, position_axis=1))
    if normalize_each_step:
        return normalize(image)
    return image, image.norm()


def extended_step(s: ExtendedState) -> ExtendedState:
    """Shift each (coin, ancilla) branch one site in its fixed direction."""
    return _permute_extended(s, 1)


def extended_step_inverse(s: ExtendedState) -> ExtendedState:
    """Adjoint of extended_step: every branch moves back one site."""
    return _permute_extended(s, -1)


def _permute_extended(s: ExtendedState, orientation: int) -> ExtendedState:
    require_interior(s.amp, axis=2)
    amp = np.empty_like(s.amp)
    for (c, a), direction in EXTENDED_DIRECTIONS.items():
        amp[c, a] = translate(s.amp[c, a], orientation * direction, axis=0)
    return s.copy_with(amp)


def classical_step(d: Distribution) -> Distribution:
    """P'(x) = P(x-1)/2 + P(x+1)/2"""
    require_interior(d.p, axis=0, what="distribution")
    p = 0.5 * (translate(d.p, RIGHT, axis=0) + translate(d.p, LEFT, axis=0))
    return Distribution(d.lattice, p)


def point_distribution(lattice: Lattice) -> Distribution:
    """Walker sitting at the lattice origin with certainty."""
    p = np.zeros(lattice.size)
    p[lattice.index(lattice.origin)] = 1.0
    return Distribution(lattice, p)


def single_runner(config: WalkConfig) -> WalkRunner:
    """Runner for the single-particle step operator selected by ``config.kind``."""
    kind = config.kind
    if kind is WalkKind.HADAMARD:
        return WalkRunner(lambda s: (hadamard_walk_step(s), None))
    if kind is WalkKind.COINLESS:
        return WalkRunner(
            lambda s: coinless_step_reduced(s, config.sign, config.normalize_each_step),
            diagnostic_name="prior_norm",
        )
    if kind is WalkKind.EXTENDED:
        return WalkRunner(lambda s: (extended_step(s), None))
    if kind is WalkKind.CLASSICAL:
        return WalkRunner(lambda d: (classical_step(d), None))
    raise ValueError(f"{kind.value} is not a single-particle walk")


def initial_single(config: WalkConfig) -> SingleState | ExtendedState | Distribution:
    lattice = Lattice.for_steps(config.steps, origin=config.origin)
    if config.kind is WalkKind.CLASSICAL:
        return point_distribution(lattice)
    if config.kind is WalkKind.EXTENDED:
        return make_initial(config.initial, lattice, ancilla_amplitudes=config.ancilla_amplitudes)
    return make_initial(config.initial, lattice)


def run_single(config: WalkConfig, observers=()) -> WalkResult:
    """
    Evolves the configured single-particle walk for ``config.steps`` steps on
    a lattice of half-width ``config.steps``.

    Args:
        config: Walk kind hadamard, coinless-reduced, extended or classical.
        observers: Objects with an ``on_step(step, state, diagnostic)`` method.
    """
    runner = single_runner(config)
    for observer in observers:
        runner.add_observer(observer)
    result = runner.run(initial_single(config), config.steps)
    logger.info("%s walk: %d steps on %d sites", config.kind.value, config.steps, 2 * config.steps + 1)
    return result

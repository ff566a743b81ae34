"""
Two-particle walks.

The pair walk applies the reduced single-particle shift to both particles
at once (U' ⊗ U'). The BEC walk applies the local operators U1 ⊗ U2, which
flip the coin whenever they displace a particle and leave it in place with
a fixed amplitude otherwise, then projects onto the co-located subspace
x1 = x2 and renormalizes.
"""

import logging

import numpy as np

from ..models.config import BecStay, InitialSpec, SignVariant, WalkConfig, WalkKind
from ..models.lattice import Lattice, require_interior, translate
from ..models.states import PairState, SingleState, make_initial, normalize
from .runner import WalkResult, WalkRunner
from .single import LEFT, RIGHT, apply_reduced_shift, run_single

logger = logging.getLogger(__name__)

# (coin axis, position axis) of each particle in PairState.amp
PARTICLE_AXES = {1: (0, 2), 2: (1, 3)}


def _particle_axes(particle: int) -> tuple[int, int]:
    try:
        return PARTICLE_AXES[particle]
    except KeyError:
        raise ValueError(f"particle must be 1 or 2 (got {particle})") from None


def pair_step(
    s: PairState, sign: SignVariant = SignVariant.PLUS, normalize_each_step: bool = True
) -> tuple[PairState, float]:
    """
    One step of U' ⊗ U' on an entangled pair.

    Returns:
        The stepped state and the norm of the image before any rescaling.
    """
    sign = SignVariant(sign)
    amp = s.amp
    for particle in (1, 2):
        coin_axis, position_axis = _particle_axes(particle)
        amp = apply_reduced_shift(amp, sign, coin_axis=coin_axis, position_axis=position_axis)
    image = s.copy_with(amp)
    if normalize_each_step:
        return normalize(image)
    return image, image.norm()


def bec_local_apply(s: PairState, particle: int, stay: BecStay = BecStay.BALANCED) -> PairState:
    """
    Local BEC operator on one particle, the other untouched:

        |0, x> -> (1/2)|1, x-1> + (1/2)|1, x+1> + k|0, x>
        |1, x> -> (1/2)|0, x-1> + (1/2)|0, x+1> + k|1, x>

    with k = 1 (LITERAL) or 1/sqrt(2) (BALANCED). No renormalization.
    """
    coin_axis, position_axis = _particle_axes(particle)
    require_interior(s.amp, axis=position_axis)
    neighbours = 0.5 * (translate(s.amp, LEFT, axis=position_axis) + translate(s.amp, RIGHT, axis=position_axis))
    # Displaced amplitude arrives with the opposite coin label
    moved = np.flip(neighbours, axis=coin_axis)
    return s.copy_with(BecStay(stay).coefficient * s.amp + moved)


def project_colocated(s: PairState) -> PairState:
    """Zero every amplitude with x1 != x2."""
    mask = np.eye(s.lattice.size, dtype=bool)
    return s.copy_with(np.where(mask, s.amp, 0))


def bec_constrained_step(s: PairState, stay: BecStay = BecStay.BALANCED) -> tuple[PairState, float]:
    """
    One constrained BEC step: U1 ⊗ U2, projection onto x1 = x2, renormalization.

    Returns:
        The renormalized state and the survival, i.e. the squared norm kept by
        the projection relative to the squared norm before the step.

    Raises:
        ZeroNormError: If the projection removes the whole state.
    """
    prior = s.norm()
    image = bec_local_apply(bec_local_apply(s, 1, stay), 2, stay)
    projected = project_colocated(image)
    survival = (projected.norm() / prior) ** 2 if prior > 0 else 0.0
    stepped, _ = normalize(projected)
    return stepped, survival


def pair_runner(config: WalkConfig) -> WalkRunner:
    if config.kind is WalkKind.PAIR:
        return WalkRunner(
            lambda s: pair_step(s, config.sign, config.normalize_each_step),
            diagnostic_name="prior_norm",
        )
    if config.kind is WalkKind.BEC:
        return WalkRunner(lambda s: bec_constrained_step(s, config.bec_stay), diagnostic_name="survival")
    raise ValueError(f"{config.kind.value} is not a two-particle walk")


def initial_pair(config: WalkConfig) -> PairState:
    lattice = Lattice.for_steps(config.steps, origin=config.origin, margin=config.separation)
    return make_initial(config.initial, lattice, separation=config.separation)


def run_pair(config: WalkConfig, observers=()) -> WalkResult[PairState]:
    """
    Evolves the configured pair or BEC walk for ``config.steps`` steps.

    Args:
        config: Walk kind pair or bec with a pair initial state.
        observers: Objects with an ``on_step(step, state, diagnostic)`` method.
    """
    runner = pair_runner(config)
    for observer in observers:
        runner.add_observer(observer)
    result = runner.run(initial_pair(config), config.steps)
    logger.info("%s walk from %s: %d steps", config.kind.value, config.initial.value, config.steps)
    return result


def pair_factorized(config: WalkConfig) -> PairState:
    """
    U'_E^N applied to a pair state, assembled from single-particle runs:

        sum over (c1, c2) of a[c1, c2] * (U'^N |c1, x0>) ⊗ (U'^N |c2, x0 + separation>)

    Each single-particle factor is evolved without renormalization so the
    relative weights of the terms are exact; the sum is normalized once.
    """
    if config.kind is not WalkKind.PAIR:
        raise ValueError("the factorized form exists for the pair walk only")
    lattice = Lattice.for_steps(config.steps, origin=config.origin, margin=config.separation)

    factors = {}
    for particle, origin in ((1, config.origin), (2, config.origin + config.separation)):
        for coin, spec in ((0, InitialSpec.ZERO), (1, InitialSpec.ONE)):
            single = run_single(
                WalkConfig(
                    kind=WalkKind.COINLESS,
                    steps=config.steps,
                    sign=config.sign,
                    initial=spec,
                    normalize_each_step=False,
                    origin=origin,
                )
            ).state
            factors[particle, coin] = _embed(single, lattice)

    amp = np.zeros(PairState.expected_shape(lattice), dtype=np.complex128)
    for (c1, c2), a in config.initial.pair_amplitudes().items():
        amp += a * np.einsum("ax,by->abxy", factors[1, c1], factors[2, c2])
    state, _ = normalize(PairState(lattice, amp))
    return state


def _embed(single: SingleState, lattice: Lattice) -> np.ndarray:
    """Amplitudes of ``single`` placed on the (wider) ``lattice``."""
    out = np.zeros((2, lattice.size), dtype=np.complex128)
    start = lattice.index(int(single.positions[0]))
    out[:, start : start + single.lattice.size] = single.amp
    return out

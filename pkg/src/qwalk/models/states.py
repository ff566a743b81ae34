"""
State values of the walk engine.

Every state is an immutable dense amplitude array over the coin register(s)
and the lattice. Axis layout (numpy C-order, which is also the flattened
index used by the dense reference operators):

    SingleState    amp[c, x]
    ExtendedState  amp[c, a, x]        a is the momentum-ancilla register
    PairState      amp[c1, c2, x1, x2]
"""

import logging
from dataclasses import dataclass, field
from typing import ClassVar, Optional, TypeVar

import numpy as np
from numpy.typing import NDArray

from .config import InitialSpec, coerce_enum
from .errors import ConfigError, NonFiniteAmplitudeError, ZeroNormError
from .lattice import Lattice

logger = logging.getLogger(__name__)

ZERO_NORM = 1e-300

S = TypeVar("S", bound="AmplitudeState")


@dataclass(frozen=True, eq=False)
class AmplitudeState:
    """Base class for the dense amplitude states"""

    lattice: Lattice
    amp: NDArray[np.complex128] = field(repr=False)

    coin_axes: ClassVar[tuple[int, ...]] = ()
    position_axes: ClassVar[tuple[int, ...]] = ()

    def __post_init__(self):
        if not isinstance(self.lattice, Lattice):
            raise TypeError("lattice must be an instance of Lattice")
        amp = np.array(self.amp, dtype=np.complex128)
        expected = self.expected_shape(self.lattice)
        if amp.shape != expected:
            raise ValueError(f"{type(self).__name__} needs amplitudes of shape {expected}, got {amp.shape}")
        if not np.all(np.isfinite(amp)):
            raise NonFiniteAmplitudeError(f"{type(self).__name__} amplitudes must be finite")
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)

    @classmethod
    def expected_shape(cls, lattice: Lattice) -> tuple[int, ...]:
        raise NotImplementedError

    @classmethod
    def zeros(cls: type[S], lattice: Lattice) -> S:
        return cls(lattice, np.zeros(cls.expected_shape(lattice), dtype=np.complex128))

    @property
    def positions(self) -> NDArray[np.int64]:
        return self.lattice.positions

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp.ravel()))

    def copy_with(self: S, amp: NDArray) -> S:
        """Same kind of state on the same lattice with new amplitudes."""
        return type(self)(self.lattice, amp)

    def amplitude(self, *index: int) -> complex:
        """Amplitude at coin labels followed by integer site labels."""
        n_coins = len(self.coin_axes)
        coins = index[:n_coins]
        sites = tuple(self.lattice.index(x) for x in index[n_coins:])
        return complex(self.amp[coins + sites])


@dataclass(frozen=True, eq=False)
class SingleState(AmplitudeState):
    """One particle: coin ⊗ position"""

    coin_axes: ClassVar[tuple[int, ...]] = (0,)
    position_axes: ClassVar[tuple[int, ...]] = (1,)

    @classmethod
    def expected_shape(cls, lattice: Lattice) -> tuple[int, ...]:
        return (2, lattice.size)


@dataclass(frozen=True, eq=False)
class ExtendedState(AmplitudeState):
    """One particle with the momentum-ancilla register: coin ⊗ ancilla ⊗ position"""

    coin_axes: ClassVar[tuple[int, ...]] = (0, 1)
    position_axes: ClassVar[tuple[int, ...]] = (2,)

    @classmethod
    def expected_shape(cls, lattice: Lattice) -> tuple[int, ...]:
        return (2, 2, lattice.size)


@dataclass(frozen=True, eq=False)
class PairState(AmplitudeState):
    """Two particles sharing one lattice: coin1 ⊗ coin2 ⊗ position1 ⊗ position2"""

    coin_axes: ClassVar[tuple[int, ...]] = (0, 1)
    position_axes: ClassVar[tuple[int, ...]] = (2, 3)

    @classmethod
    def expected_shape(cls, lattice: Lattice) -> tuple[int, ...]:
        return (2, 2, lattice.size, lattice.size)


def norm(state: AmplitudeState) -> float:
    """2-norm of a state."""
    return state.norm()


def normalize(state: S) -> tuple[S, float]:
    """
    Rescales a state to unit norm.

    Returns:
        The normalized state and the norm it had before rescaling.

    Raises:
        ZeroNormError: If the norm is below 1e-300.
    """
    prior_norm = state.norm()
    if prior_norm < ZERO_NORM:
        raise ZeroNormError(f"cannot normalize a {type(state).__name__} with norm {prior_norm!r}")
    if prior_norm == 1.0:
        return state, prior_norm
    return state.copy_with(state.amp / prior_norm), prior_norm


def make_initial(
    spec: InitialSpec | str,
    lattice: Lattice,
    *,
    ancilla_amplitudes: Optional[tuple[complex, complex]] = None,
    separation: int = 0,
) -> SingleState | ExtendedState | PairState:
    """
    Builds a normalized state localized at the lattice origin.

    Single-particle specs give a SingleState, or an ExtendedState when
    ``ancilla_amplitudes`` is passed. Pair specs give a PairState with particle
    2 placed ``separation`` sites from particle 1.
    """
    spec = coerce_enum(InitialSpec, spec, "initial")
    x0 = lattice.index(lattice.origin)

    if spec.is_pair:
        if ancilla_amplitudes is not None:
            raise ConfigError("pair states have no momentum-ancilla register")
        try:
            x2 = lattice.index(lattice.origin + separation)
        except IndexError:
            raise ConfigError(f"separation {separation} places particle 2 off the lattice") from None
        amp = np.zeros(PairState.expected_shape(lattice), dtype=np.complex128)
        for (c1, c2), a in spec.pair_amplitudes().items():
            amp[c1, c2, x0, x2] = a
        state = PairState(lattice, amp)
    elif separation:
        raise ConfigError("separation only applies to pair states")
    elif ancilla_amplitudes is None:
        amp = np.zeros(SingleState.expected_shape(lattice), dtype=np.complex128)
        amp[:, x0] = spec.coin_amplitudes()
        state = SingleState(lattice, amp)
    else:
        amp = np.zeros(ExtendedState.expected_shape(lattice), dtype=np.complex128)
        amp[:, :, x0] = np.outer(spec.coin_amplitudes(), np.asarray(ancilla_amplitudes, dtype=np.complex128))
        state = ExtendedState(lattice, amp)

    logger.debug("initial %s state %s at x0=%d", type(state).__name__, spec.value, lattice.origin)
    return state

"""
The bounded one-dimensional lattice every walk lives on.

Sites run from ``origin - half_width`` to ``origin + half_width`` with a step
length of one site. A walk of N steps started at the origin never leaves
``[origin - N, origin + N]``, so a lattice built with ``half_width >= N`` is
exact; amplitudes are never wrapped around.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import BoundaryOverflowError, ConfigError


@dataclass(frozen=True)
class Lattice:
    """Site range of a walk"""

    half_width: int
    origin: int = 0

    def __post_init__(self):
        if not isinstance(self.half_width, (int, np.integer)) or isinstance(self.half_width, bool):
            raise TypeError(f"half_width must be int, got {type(self.half_width).__name__}")
        if not isinstance(self.origin, (int, np.integer)) or isinstance(self.origin, bool):
            raise TypeError(f"origin must be int, got {type(self.origin).__name__}")
        if self.half_width < 0:
            raise ConfigError(f"half_width must be non-negative (got {self.half_width})")

    @staticmethod
    def for_steps(steps: int, origin: int = 0, margin: int = 0) -> "Lattice":
        """Smallest lattice on which ``steps`` steps from ``origin`` stay inside."""
        if steps < 0:
            raise ConfigError(f"step count must be non-negative (got {steps})")
        return Lattice(half_width=steps + abs(margin), origin=origin)

    @property
    def size(self) -> int:
        return 2 * self.half_width + 1

    @property
    def positions(self) -> NDArray[np.int64]:
        """Integer site labels in storage order."""
        return np.arange(self.origin - self.half_width, self.origin + self.half_width + 1, dtype=np.int64)

    def index(self, x: int) -> int:
        """Storage index of site ``x``."""
        i = x - self.origin + self.half_width
        if not 0 <= i < self.size:
            raise IndexError(f"site {x} lies outside the lattice {self.origin}±{self.half_width}")
        return i


def require_interior(amp: NDArray, axis: int, what: str = "state") -> None:
    """Raise BoundaryOverflowError if any amplitude along ``axis`` sits on an edge site."""
    first = np.take(amp, 0, axis=axis)
    last = np.take(amp, -1, axis=axis)
    if np.any(first != 0) or np.any(last != 0):
        raise BoundaryOverflowError(f"{what} touches the lattice boundary; the lattice is too small for this many steps")


def translate(amp: NDArray, offset: int, axis: int) -> NDArray:
    """Move every amplitude ``offset`` sites along ``axis`` (``-1`` is left).

    Callers check ``require_interior`` first, so the wrapped-around edge
    entries are always zero.
    """
    return np.roll(amp, offset, axis=axis)

"""Iterates a step operator and reports every step to observers."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, Protocol, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


class StepObserver(Protocol):
    def on_step(self, step: int, state: Any, diagnostic: Optional[float]) -> None: ...


@dataclass(frozen=True)
class WalkResult(Generic[T]):
    """Final state of a run plus its per-step diagnostics.

    ``diagnostic_name`` is ``"prior_norm"`` for the non-isometric reduced
    operators, ``"survival"`` for the constrained BEC walk and ``None`` when the
    step operator preserves the norm (``diagnostics`` is then empty).
    """

    state: T
    steps: int
    diagnostic_name: Optional[str] = None
    diagnostics: tuple[float, ...] = ()


class WalkRunner(Generic[T]):
    """Applies one step function repeatedly"""

    def __init__(self, step: Callable[[T], tuple[T, Optional[float]]], diagnostic_name: Optional[str] = None):
        self._step = step
        self._diagnostic_name = diagnostic_name
        self._observers: list[StepObserver] = []

    def add_observer(self, observer: StepObserver):
        """Add an observer to be notified after every step"""
        self._observers.append(observer)

    def _notify_observers(self, step: int, state: T, diagnostic: Optional[float]):
        for observer in self._observers:
            observer.on_step(step, state, diagnostic)

    def run(self, initial: T, steps: int) -> WalkResult[T]:
        state = initial
        diagnostics = []
        for step in range(1, steps + 1):
            state, diagnostic = self._step(state)
            if diagnostic is not None:
                diagnostics.append(diagnostic)
                logger.debug("step %d: %s=%.15g", step, self._diagnostic_name, diagnostic)
            self._notify_observers(step, state, diagnostic)
        return WalkResult(state, steps, self._diagnostic_name if diagnostics else None, tuple(diagnostics))

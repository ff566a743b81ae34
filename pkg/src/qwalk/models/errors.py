"""Exceptions raised by the walk engine."""


class QuantumWalkError(Exception):
    """Base class for every error the engine raises on purpose."""


class ConfigError(QuantumWalkError, ValueError):
    """A walk configuration or initial-state request is invalid."""


class ZeroNormError(QuantumWalkError):
    """A state was projected out completely and cannot be renormalized."""


class BoundaryOverflowError(QuantumWalkError):
    """An amplitude sits on the lattice edge and the next step would push it off."""


class NotNormalizedError(QuantumWalkError):
    """A measurement was requested on a state whose norm is not 1."""


class DimensionTooLargeError(QuantumWalkError):
    """A dense reference operator would be too large to build."""


class TooManyStepsError(QuantumWalkError):
    """Path enumeration was asked for more steps than it can enumerate."""


class NonFiniteAmplitudeError(QuantumWalkError, ValueError):
    """A state holds an infinite or NaN amplitude, usually after an unnormalized run overflowed."""

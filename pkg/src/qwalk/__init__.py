"""Discrete-time quantum walks with a coin-retaining shift operator."""

__version__ = "0.1.0"

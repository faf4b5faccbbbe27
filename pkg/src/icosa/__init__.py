"""Harmonic cubics, icosahedral sets and the rank-2 bundle trichotomy."""

__version__ = "0.1.0"

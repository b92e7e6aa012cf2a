"""Rotation synchronization by deep matrix factorization."""

__version__ = "0.1.0"

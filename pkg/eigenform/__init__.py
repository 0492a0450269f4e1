"""Eigenforms of the renormalization operator on finitely ramified fractals."""

__version__ = "0.1.0"

"""Khovanov homology of tangles via delooping and Gaussian elimination."""

__version__ = "1.0.0"

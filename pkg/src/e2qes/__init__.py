"""Spectral toolkit for the E2 quasi-exactly solvable model and its complex Mathieu limit."""
from .linalg import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]

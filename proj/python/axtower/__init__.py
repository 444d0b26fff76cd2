"""Kummer tower arithmetic, Galois oscillation and H^1 digit extraction."""

from ._core import *  # noqa: F401,F403
from ._core import AxtowerError, TowerConfig, TowerElement, ResidueField  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]

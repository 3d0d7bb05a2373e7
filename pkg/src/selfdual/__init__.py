"""Exact computations with self-dual point configurations and self-dual matroids."""

from .errors import SelfDualError
from .matroid import Matroid

__version__ = "0.1.0"

__all__ = ["Matroid", "SelfDualError", "__version__"]

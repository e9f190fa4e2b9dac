"""Exact partition combinatorics for modular representations of ``S_n`` and ``GL_n(q)``."""

from .partitions import Partition

__all__ = ["Partition"]
__version__ = "0.1.0"

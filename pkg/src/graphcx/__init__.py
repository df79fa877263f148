"""Exact graph-homology engine for plain, hairy, chord and decorated graph complexes."""

from .graphs import Ambient, Graph

__all__ = ["Ambient", "Graph"]
__version__ = "0.1.0"

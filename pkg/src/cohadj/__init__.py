"""Squiggle combinatorics of the simplicial category Adj, with a small monad laboratory."""
from .squiggle import NAMED, Squiggle, compose, validate

__all__ = ["NAMED", "Squiggle", "compose", "validate"]

"""Exact combinatorics of boson normal ordering, Feynman-type diagrams and their Hopf algebras."""

from ._core import *  # noqa: F401,F403
from ._core import BoundExceeded, ParseError

__all__ = [name for name in dir() if not name.startswith("_")]

"""k-rainbow domination on graphs and lexicographic products."""

from ._core import *  # noqa: F401,F403
from ._core import RainbowError, Graph

__all__ = [name for name in dir() if not name.startswith("_")]

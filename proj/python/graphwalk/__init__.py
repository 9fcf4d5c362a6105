"""Local random walks for maximizing smooth functions on graph vertices."""

from ._graphwalk import *  # noqa: F401,F403
from ._graphwalk import __doc__  # noqa: F401

__version__ = "0.1.0"

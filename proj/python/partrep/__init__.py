"""Partitions of N whose weighted representation function R_{1,k} matches
that of the complement: construction, verification and lower-bound probes."""

from ._partrep import *  # noqa: F401,F403
from ._partrep import __doc__  # noqa: F401

__version__ = "0.1.0"

"""Maximal surfaces with planar curvature lines in Lorentz-Minkowski 3-space."""

from ._maxpcl import *  # noqa: F401,F403
from ._maxpcl import Error, InvalidFamilyParameter, PoleError  # noqa: F401

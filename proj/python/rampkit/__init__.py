"""Orthogonal arrays, augmented orthogonal arrays and ideal ramp schemes over finite fields."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

"""Circular chromatic numbers via colorings, cycle ratios and token games."""

from circhi._core import *  # noqa: F401,F403
from circhi._core import __doc__  # noqa: F401

"""Vandermonde compressed sensing with complex-field syndrome decoding.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

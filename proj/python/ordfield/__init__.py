"""Exact arithmetic in totally ordered non-Archimedean fields.

Everything public lives in the compiled core; this package just re-exports
it under a stable name.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

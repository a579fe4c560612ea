"""Connected-RIS sizing, beam steering, correlation grouping, power and rate
analysis bindings."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

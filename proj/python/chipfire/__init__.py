"""Chip-firing and linear pencils on metric graphs (chains of loops)."""

from ._chipfire import *  # noqa: F401,F403
from ._chipfire import __version__  # noqa: F401

"""Exact p-adic quadratic form classification and embedding decisions."""

from ._qpembed import *  # noqa: F401,F403
from ._qpembed import __all__  # noqa: F401

"""Generalized binomial states: construction, bases, squeezing and self-checks."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import verify_json as _verify_json


def verify(tolerance=1e-10, seed=20240607, N=-1, groups=()):
    """Run the built-in identity checks and return the report as a dict."""
    return _json.loads(_verify_json(tolerance, seed, N, list(groups)))


__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact Hall-algebra calculator for monomial quiver algebras over F_q.

The heavy lifting happens in the compiled extension; this package adds a
thin convenience layer that decodes the JSON payloads.
"""

import json
from pathlib import Path

from ._hallbridge import BoundError, CapError, ParseError, Session

__all__ = [
    "BoundError",
    "CapError",
    "ParseError",
    "Session",
    "load",
    "loads",
]


def loads(algebra_text, bound=None):
    """Open a session from algebra definition text."""
    return Session(algebra_text, list(bound) if bound else [])


def load(path, bound=None):
    """Open a session from an algebra definition file."""
    return loads(Path(path).read_text(), bound)


def decoded(method):
    """Parse a JSON-string result returned by a Session method."""
    return json.loads(method)

"""Hadwiger numbers, clique-matchings and s-club contractions."""

from ._gminor import *  # noqa: F401,F403
from ._gminor import (
    CapacityError,
    DomainError,
    FormatError,
    GminorError,
    Graph,
    ParseError,
    PreconditionError,
    UnsupportedError,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Frobenius complexity invariants of Hibi rings."""
from .errors import (
    GuardExceededError,
    HibiError,
    InconclusiveError,
    InvalidPosetError,
    NotComparableError,
    PosetParseError,
    PreconditionError,
    WitnessUnavailableError,
)
from .poset import HatPoset, Path, Poset, build_hat
from .hibi import ExponentMap, PosetIdeal

__version__ = "0.1.0"

__all__ = [
    "GuardExceededError",
    "HibiError",
    "InconclusiveError",
    "InvalidPosetError",
    "NotComparableError",
    "PosetParseError",
    "PreconditionError",
    "WitnessUnavailableError",
    "HatPoset",
    "Path",
    "Poset",
    "build_hat",
    "ExponentMap",
    "PosetIdeal",
    "__version__",
]

"""Exact computation and verification of Lehmer-Euler numbers and their relatives."""

from .exact_core import ConsistencyError, InvalidInputError
from .lehmer_euler import compare_methods, euler_numbers, lehmer_w, w_recurrence

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "InvalidInputError",
    "compare_methods",
    "euler_numbers",
    "lehmer_w",
    "w_recurrence",
    "__version__",
]

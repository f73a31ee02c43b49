"""Exact computations with finite-dimensional Jordan algebras over the rationals."""

from .algebra import Algebra, change_of_basis, direct_sum, is_jordan, unitalize
from .catalog import fingerprint, get
from .cohomology import b2_dim, h2_dim, z2_dim

__all__ = [
    "Algebra",
    "b2_dim",
    "change_of_basis",
    "direct_sum",
    "fingerprint",
    "get",
    "h2_dim",
    "is_jordan",
    "unitalize",
    "z2_dim",
]
__version__ = "0.1.0"

"""Hadamard and skew Hadamard matrices of every order with a known
construction up to 1000, together with the combinatorial machinery they
need: finite fields, m-sequences, difference-set families, and
complementary sequence families.

The top-level resolvers live in :mod:`hadamard.registry`; the individual
constructions in :mod:`hadamard.constructions`.
"""

from .exactmat import (
    circulant, back_identity, tensor, assemble,
    is_hadamard, is_skew_hadamard, are_t_matrices, abs_det_is_maximal,
    to_pm1, from_pm1,
)
from .galois import field, find_primitive_poly, primitive_element

__version__ = "0.1.0"

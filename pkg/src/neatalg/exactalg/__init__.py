"""Exact scalar, polynomial and matrix arithmetic over GF(p), GF(p^k) and QQ."""

from .fields import (
    GF, QQ, ExtensionField, Field, FieldError, PrimeField, QuadraticExtension, Rationals,
    field_from_spec, field_name, parse_field,
)
from .matrix import Matrix, MatrixError, Subspace, char_poly, det, nullspace, rref
from .poly import (
    Poly, PolyError, charpoly_from_elementary, newton_coeffs_from_power_sums, poly_discriminant,
    poly_gcd, poly_separable, poly_sqrt_monic,
)

__all__ = [
    "GF", "QQ", "ExtensionField", "Field", "FieldError", "PrimeField", "QuadraticExtension",
    "Rationals", "field_from_spec", "field_name", "parse_field",
    "Matrix", "MatrixError", "Subspace", "char_poly", "det", "nullspace", "rref",
    "Poly", "PolyError", "charpoly_from_elementary", "newton_coeffs_from_power_sums",
    "poly_discriminant", "poly_gcd", "poly_separable", "poly_sqrt_monic",
]

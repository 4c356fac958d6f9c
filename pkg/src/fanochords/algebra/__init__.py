"""Exact fields, monomial orders, sparse polynomials and text I/O."""
from .field import (DEFAULT_PRIME, GF, QQ, Field, FieldElement, FieldError, PrimeField,
                    RationalField, field_from_spec, field_inverse)
from .monomial import GREVLEX, LEX, MonomialOrder, MonomialOverflow, OrderKind, elim
from .polynomial import (ArityMismatch, Polynomial, PolynomialRing, RingMismatch,
                         jacobian_matrix, poly_arith)
from .textio import (ParseError, format_ideal_text, format_polynomial, parse_ideal_text,
                     parse_polynomial, parse_ring_header)

__all__ = [
    "DEFAULT_PRIME", "GF", "QQ", "Field", "FieldElement", "FieldError", "PrimeField",
    "RationalField", "field_from_spec", "field_inverse", "GREVLEX", "LEX", "MonomialOrder",
    "MonomialOverflow", "OrderKind", "elim", "ArityMismatch", "Polynomial", "PolynomialRing",
    "RingMismatch", "jacobian_matrix", "poly_arith", "ParseError", "format_ideal_text",
    "format_polynomial", "parse_ideal_text", "parse_polynomial", "parse_ring_header",
]

"""Exact arithmetic in F_q, A = F_q[T] and K = F_q(T)."""

from .field import FieldParams, default_modulus, field_create, field_from_q, is_prime
from .poly import (
    Poly,
    all_polys_below,
    bracket,
    carlitz_factorial_D,
    carlitz_L,
    int_val_p,
    irreducible_enum,
    is_irreducible,
    monic_enum,
    monics_upto,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    poly_valuation,
    poly_xgcd,
)
from .rational import RatK, v_at_prime
from .syntax import (
    ParseError,
    format_elem,
    format_poly,
    format_rat,
    parse_field_elem,
    parse_poly,
    parse_prime_poly,
    parse_rat,
)

__all__ = [
    "FieldParams", "default_modulus", "field_create", "field_from_q", "is_prime",
    "Poly", "all_polys_below", "bracket", "carlitz_factorial_D", "carlitz_L",
    "int_val_p", "irreducible_enum", "is_irreducible", "monic_enum", "monics_upto",
    "poly_divmod", "poly_gcd", "poly_lcm", "poly_valuation", "poly_xgcd",
    "RatK", "v_at_prime",
    "ParseError", "format_elem", "format_poly", "format_rat", "parse_field_elem",
    "parse_poly", "parse_prime_poly", "parse_rat",
]

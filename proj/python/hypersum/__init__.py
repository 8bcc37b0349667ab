"""Exact universal denominators, Gosper summation and rational solutions of
linear recurrences with polynomial coefficients.

Expressions are strings in the variable ``n``; results are plain dicts whose
polynomials carry a ``pretty`` string and ``coeffs`` (ascending, ``"num/den"``).
"""

from fractions import Fraction

from ._hypersum import (
    EvalError,
    ParseError,
    denominator,
    dispersion,
    format,
    gosper,
    gp_rep,
    parse,
    rational_solve,
    verify_gosper,
    verify_rational,
)

__all__ = [
    "EvalError",
    "ParseError",
    "coeffs",
    "denominator",
    "dispersion",
    "format",
    "gosper",
    "gp_rep",
    "parse",
    "rational_solve",
    "verify_gosper",
    "verify_rational",
]


def coeffs(poly):
    """Coefficients of a serialized polynomial as Fractions, ascending degree."""
    return [Fraction(c) for c in poly["coeffs"]]

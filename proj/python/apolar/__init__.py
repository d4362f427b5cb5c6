"""Exact computations with monomial and homogeneous artinian ideals.

Monomial ideals and antichains are lists of exponent lists. Polynomials and
homogeneous ideals use the same text syntax as the command line tool.
"""

from ._core import (
    AmbientMismatch,
    DomainError,
    NotArtinian,
    ParseError,
    ann,
    antipodal,
    closure,
    colon_power,
    decompose,
    docle,
    dual_socle_poly,
    format_ideal,
    hilbert_function,
    initial_ideal,
    intersect,
    inverse_ideal,
    monomial_iff,
    parse_ideal,
    saturate,
    series_check,
    socle_dimension,
    verify_gorenstein_ann,
)

__all__ = [
    "AmbientMismatch",
    "DomainError",
    "NotArtinian",
    "ParseError",
    "ann",
    "antipodal",
    "closure",
    "colon_power",
    "decompose",
    "docle",
    "dual_socle_poly",
    "format_ideal",
    "hilbert_function",
    "initial_ideal",
    "intersect",
    "inverse_ideal",
    "monomial_iff",
    "parse_ideal",
    "saturate",
    "series_check",
    "socle_dimension",
    "verify_gorenstein_ann",
]

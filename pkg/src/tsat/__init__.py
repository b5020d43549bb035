"""Exact t-adic saturation, strength and heights over Q, Q(t) and Q[t]_(t)."""

__version__ = "0.1.0"

from .errors import InvariantError, NotApplicable
from .ring import DVR, Q, QT, Ideal, Poly, RingSpec, format_poly
from .syntax import ParseError, parse_poly, parse_poly_list

__all__ = [
    "__version__",
    "DVR",
    "Q",
    "QT",
    "Ideal",
    "InvariantError",
    "NotApplicable",
    "ParseError",
    "Poly",
    "RingSpec",
    "format_poly",
    "parse_poly",
    "parse_poly_list",
]

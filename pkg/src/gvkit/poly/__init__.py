from .parser import ParseError, parse_poly
from .poly import Poly, poly_arith, polys
from .ring import GREVLEX, LEX, Cmp, MonOrder, Monomial, RingSpec, as_order, mon_cmp

__all__ = [
    "Cmp",
    "GREVLEX",
    "LEX",
    "MonOrder",
    "Monomial",
    "ParseError",
    "Poly",
    "RingSpec",
    "as_order",
    "mon_cmp",
    "parse_poly",
    "poly_arith",
    "polys",
]

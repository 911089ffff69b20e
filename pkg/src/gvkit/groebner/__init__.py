from .engine import Encoder, GBStats, s_polynomial
from .ideal import (
    IdealGB,
    NormalFormResult,
    buchberger,
    eliminate,
    ideal_combine,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_power,
    ideal_quotient,
    ideal_sum,
    load_ideal,
    normal_form,
    principal,
    quotient_by_element,
)

__all__ = [
    "Encoder",
    "GBStats",
    "IdealGB",
    "NormalFormResult",
    "buchberger",
    "eliminate",
    "ideal_combine",
    "ideal_equal",
    "ideal_intersect",
    "ideal_member",
    "ideal_power",
    "ideal_quotient",
    "ideal_sum",
    "load_ideal",
    "normal_form",
    "principal",
    "quotient_by_element",
    "s_polynomial",
]

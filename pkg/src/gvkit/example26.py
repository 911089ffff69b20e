"""Built-in dataset: the seven-variable ring whose ideal (r) fails to be a w-ideal.

``evaluate`` recomputes every membership and ideal-equality assertion from
scratch and, when they hold, issues the w-failure certificate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .groebner import IdealGB, ideal_equal, ideal_quotient, ideal_sum
from .poly import Poly, RingSpec
from .wcert import CertificateError, QuotRing, WFailureCert, w_failure_certificate

VARIABLES = ("x1", "x2", "r", "a", "b", "c", "d")

GENERATORS = (
    "c*r - x1*a",
    "x2*c - d - x1*b",
    "d*r",
    "x2*a - b*r",
    "c*a - x1*r",
    "r^2 - a^2",
    "x2*r - a*b",
)

# membership assertions: name -> polynomial, checked in I (A) or K (B)
A_ASSERTIONS = (
    ("A1", "x1*r - a*c"),
    ("A2", "x2*r - a*b"),
    ("A3", "r^2 - a^2"),
    ("A4", "x1*a - r*c"),
    ("A5", "x2*a - r*b"),
    ("A6", "x1*b - x2*c + d"),
    ("A7", "r*d"),
    ("A8", "a*d"),
)

B_ASSERTIONS = (
    ("B1", "x2*r - a*b"),
    ("B2", "r^2 - a^2"),
    ("B3", "x2*a - r*b"),
    ("B4", "x2*c - d"),
    ("B5", "r*c"),
    ("B6", "a*c"),
    ("B7", "r*d"),
    ("B8", "a*d"),
    ("B9", "x1"),
)

PRINCIPAL = "r"
GV_IDEAL = ("x1", "x2")
WITNESS = "c"


@dataclass
class Assertion:
    name: str
    statement: str
    expected: bool
    actual: bool

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class Example26Result:
    order: str
    generators: list[str]
    assertions: list[Assertion]
    certificate: WFailureCert | None
    certificate_error: str | None
    timings: dict

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions) and self.certificate is not None


def mutate(gens: tuple[str, ...], index: int) -> list[str]:
    """Corrupt generator ``index`` (1-based) by flipping the sign of its last term."""
    if not 1 <= index <= len(gens):
        raise ValueError(f"--mutate-gen must be between 1 and {len(gens)}")
    out = list(gens)
    text = out[index - 1]
    head, sep, tail = text.rpartition(" - ")
    if sep:
        out[index - 1] = f"{head} + {tail}"
    else:
        out[index - 1] = f"{text} + x1"
    return out


def ring(order: str = "grevlex") -> RingSpec:
    return RingSpec(VARIABLES, order)


def ideals(order: str = "grevlex", gens=GENERATORS) -> dict[str, IdealGB]:
    P = ring(order)
    I = IdealGB.parse(P, gens)

    def plus(*extra):
        return ideal_sum(IdealGB.parse(P, extra), I)

    return {"I": I, "J": plus("x1", "x2"), "K": plus("x1"), "L": plus("x2"), "T": plus("r")}


def evaluate(order: str = "grevlex", mutate_gen: int | None = None) -> Example26Result:
    gens = mutate(GENERATORS, mutate_gen) if mutate_gen else list(GENERATORS)
    timings = {}
    t0 = time.perf_counter()
    ids = ideals(order, gens)
    I, J, K, T = ids["I"], ids["J"], ids["K"], ids["T"]
    P = I.ring
    timings["ideals"] = time.perf_counter() - t0

    out: list[Assertion] = []

    def member_block(items, target, tname, conj):
        block = []
        for name, text in items:
            ok = target.contains(Poly.parse(text, P))
            block.append(Assertion(name, f"{text} in {tname}", True, ok))
        out.extend(block)
        out.append(Assertion(conj, " and ".join(a.name for a in block), True, all(a.actual for a in block)))

    t0 = time.perf_counter()
    member_block(A_ASSERTIONS, I, "I", "A")
    member_block(B_ASSERTIONS, K, "K", "B")
    timings["membership"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    zero_colon_sum = ideal_sum(ideal_quotient(I, T), K)
    s = [
        Assertion("S1", "(I : K) == I", True, ideal_equal(ideal_quotient(I, K), I)),
        Assertion("S2", "(K : J) == K", True, ideal_equal(ideal_quotient(K, J), K)),
        Assertion("S3", "c not in (I : T) + K", True, not zero_colon_sum.contains(Poly.parse("c", P))),
        Assertion("S4", "x2*c in (I : T) + K", True, zero_colon_sum.contains(Poly.parse("x2*c", P))),
    ]
    out.extend(s)
    out.append(Assertion("S", "S1 and S2 and S3 and S4", True, all(a.actual for a in s)))
    timings["colon"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    cert, err = None, None
    if all(a.passed for a in out):
        try:
            cert = w_failure_certificate(QuotRing(I), PRINCIPAL, GV_IDEAL, WITNESS)
        except CertificateError as e:
            err = str(e)
    else:
        err = "not attempted: an assertion failed"
    timings["certificate"] = time.perf_counter() - t0
    return Example26Result(order, gens, out, cert, err, {k: round(v, 4) for k, v in timings.items()})

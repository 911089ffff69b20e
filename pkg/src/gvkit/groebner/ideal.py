"""Ideals of Q[x] backed by reduced Groebner bases, and their calculus."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..poly import MonOrder, Poly, RingSpec, as_order
from ..poly.ring import mon_divides
from .engine import Encoder, GBStats, basis_entries, buchberger_int, normal_form_int


@dataclass(frozen=True)
class NormalFormResult:
    remainder: Poly
    cofactors: tuple[Poly, ...] | None = None


class IdealGB:
    """An ideal with its generators and reduced Groebner basis.

    The basis is computed for ``ring.order`` and is unique for it; instances
    are immutable once built.
    """

    def __init__(self, ring: RingSpec, generators: Iterable[Poly], basis: Sequence[Poly], stats: GBStats | None = None):
        self.ring = ring
        self.generators = tuple(g.in_ring(ring) for g in generators)
        self.basis = tuple(basis)
        self.stats = stats
        self._enc = None
        self._entries = None

    @classmethod
    def from_generators(cls, gens: Iterable[Poly], ring: RingSpec | None = None, order: MonOrder | str | None = None) -> "IdealGB":
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            ring = gens[0].ring
        if order is not None:
            ring = ring.with_order(order)
        gens = [g.in_ring(ring) for g in gens]
        stats = GBStats()
        basis = buchberger_int(gens, ring, stats)
        return cls(ring, gens, basis, stats)

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str]) -> "IdealGB":
        return cls.from_generators([Poly.parse(t, ring) for t in texts], ring)

    @classmethod
    def zero(cls, ring: RingSpec) -> "IdealGB":
        return cls(ring, [], [])

    @classmethod
    def unit(cls, ring: RingSpec) -> "IdealGB":
        one = Poly.constant(ring, 1)
        return cls(ring, [one], [one])

    @property
    def order(self) -> MonOrder:
        return self.ring.order

    def is_zero(self) -> bool:
        return not self.basis

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def _prepared(self):
        if self._entries is None:
            self._enc = Encoder(self.ring)
            self._entries = basis_entries(self.basis, self._enc)
        return self._enc, self._entries

    def reduce(self, f: Poly) -> Poly:
        enc, entries = self._prepared()
        return normal_form_int(f.in_ring(self.ring), entries, enc)

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)

    def __contains__(self, f: Poly) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "IdealGB") -> bool:
        return all(self.contains(g) for g in other.basis)

    def in_order(self, order: MonOrder | str) -> "IdealGB":
        order = as_order(order)
        if order == self.ring.order:
            return self
        return IdealGB.from_generators(self.generators or self.basis, self.ring, order)

    def basis_strings(self) -> list[str]:
        return [str(g) for g in self.basis]

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "generators": [str(g) for g in self.generators],
            "basis": self.basis_strings(),
        }

    def __eq__(self, other):
        if not isinstance(other, IdealGB):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"IdealGB({self.ring}, basis=[{', '.join(map(str, self.basis))}])"


def load_ideal(data: dict | str) -> IdealGB:
    """Ideal from the JSON form ``{"ring": {...}, "generators": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    ring = RingSpec.from_json(data["ring"])
    return IdealGB.parse(ring, data["generators"])


def buchberger(gens: Sequence[Poly], order: MonOrder | str | None = None, ring: RingSpec | None = None) -> IdealGB:
    return IdealGB.from_generators(gens, ring=ring, order=order)


def normal_form(f: Poly, I: IdealGB, cofactors: bool = False) -> NormalFormResult:
    """Normal form of ``f`` modulo ``I``.

    With ``cofactors=True`` a rational division also records ``q_i`` with
    ``f = sum q_i * basis_i + remainder``.
    """
    f = f.in_ring(I.ring)
    if not cofactors:
        return NormalFormResult(I.reduce(f))
    ring = I.ring
    qs = [Poly.zero(ring) for _ in I.basis]
    rem = {}
    p = f
    while p:
        c, m = p.terms()[0]
        for i, g in enumerate(I.basis):
            if mon_divides(g.lm(), m):
                u = tuple(a - b for a, b in zip(m, g.lm()))
                k = c / g.lc()
                qs[i] = qs[i] + Poly(ring, {u: k}, _trusted=True)
                p = p - g.mul_monomial(u, k)
                break
        else:
            rem[m] = c
            p = p - Poly(ring, {m: c}, _trusted=True)
    return NormalFormResult(Poly(ring, rem, _trusted=True), tuple(qs))


def ideal_member(f: Poly, I: IdealGB) -> bool:
    return I.contains(f)


def _same_vars(I1: IdealGB, I2: IdealGB):
    if I1.ring.variables != I2.ring.variables:
        raise ValueError(f"ideals live in different rings: {I1.ring} vs {I2.ring}")


def ideal_equal(I1: IdealGB, I2: IdealGB) -> bool:
    """Reduced bases compared term for term (in ``I1``'s order)."""
    _same_vars(I1, I2)
    I2 = I2.in_order(I1.order)
    return I1.basis == I2.basis


def ideal_combine(I1: IdealGB, I2: IdealGB, op: str = "sum") -> IdealGB:
    _same_vars(I1, I2)
    ring = I1.ring
    g1 = list(I1.generators or I1.basis)
    g2 = [g.in_ring(ring) for g in (I2.generators or I2.basis)]
    if op == "sum":
        return IdealGB.from_generators(g1 + g2, ring)
    if op == "product":
        if not g1 or not g2:
            return IdealGB.zero(ring)
        return IdealGB.from_generators([a * b for a in g1 for b in g2], ring)
    raise ValueError(f"unknown ideal operation {op!r}")


def ideal_sum(*ideals: IdealGB) -> IdealGB:
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_combine(acc, J, "sum")
    return acc


def ideal_power(J: IdealGB, k: int) -> IdealGB:
    if k < 0:
        raise ValueError("negative ideal power")
    acc = IdealGB.unit(J.ring)
    for _ in range(k):
        acc = ideal_combine(acc, J, "product")
    return acc


def principal(f: Poly) -> IdealGB:
    return IdealGB.from_generators([f], f.ring)


def eliminate(I: IdealGB, drop_vars: Iterable[str]) -> IdealGB:
    """``I`` intersected with the subring on the remaining variables."""
    drop_set = set(drop_vars)
    drop = [v for v in I.ring.variables if v in drop_set]
    unknown = drop_set - set(I.ring.variables)
    if unknown:
        raise KeyError(f"unknown variables {sorted(unknown)}")
    if not drop:
        return I
    keep = [v for v in I.ring.variables if v not in drop]
    work = RingSpec(drop + keep, MonOrder("elim", len(drop)))
    big = IdealGB.from_generators([g.in_ring(work) for g in (I.generators or I.basis)], work)
    target = RingSpec(keep, I.order)
    kept = [g for g in big.basis if not (g.used_variables() & drop_set)]
    return IdealGB.from_generators([g.in_ring(target) for g in kept], target)


def _tag_name(ring: RingSpec) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def ideal_intersect(I1: IdealGB, I2: IdealGB) -> IdealGB:
    """Intersection by eliminating ``t`` from ``t*I1 + (1-t)*I2``."""
    _same_vars(I1, I2)
    ring = I1.ring
    if I1.is_zero() or I2.is_zero():
        return IdealGB.zero(ring)
    t = _tag_name(ring)
    ext = RingSpec((t,) + ring.variables, ring.order)
    tv = Poly.var(ext, t)
    gens = [tv * g.in_ring(ext) for g in I1.basis]
    gens += [(1 - tv) * g.in_ring(ext) for g in I2.basis]
    lifted = IdealGB(ext, gens, [])
    out = eliminate(lifted, [t])
    return IdealGB.from_generators([g.in_ring(ring) for g in out.basis], ring)


def quotient_by_element(I: IdealGB, g: Poly) -> IdealGB:
    """``(I : g)`` as ``(I ∩ (g)) / g``."""
    ring = I.ring
    g = g.in_ring(ring)
    if not g or I.contains(g):
        return IdealGB.unit(ring)
    inter = ideal_intersect(I, principal(g))
    return IdealGB.from_generators([h.exact_div(g) for h in inter.basis], ring)


def ideal_quotient(I: IdealGB, J: IdealGB) -> IdealGB:
    """``(I : J) = {f : f*J ⊆ I}``, intersecting ``(I : g)`` over ``g`` in J."""
    _same_vars(I, J)
    J = J.in_order(I.order)
    acc = IdealGB.unit(I.ring)
    for g in J.basis:
        q = quotient_by_element(I, g)
        if q.is_unit():
            continue
        acc = q if acc.is_unit() else ideal_intersect(acc, q)
    return acc



"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .ring import Monomial, RingSpec, mon_divides


class Poly:
    """Immutable polynomial in ``ring``.

    Terms live in a dict ``monomial -> Fraction`` with no zero entries; the
    descending term list of the active order is produced on demand and
    cached. Two polys are equal iff they share the ring and the dict.
    """

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, Fraction] | None = None, *, _trusted=False):
        self.ring = ring
        if terms is None:
            terms = {}
        if not _trusted:
            n = ring.nvars
            clean = {}
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m} for {ring}")
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            terms = {m: c for m, c in clean.items() if c}
        self._terms = terms
        self._sorted = None
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, ring: RingSpec) -> "Poly":
        return cls(ring, {}, _trusted=True)

    @classmethod
    def constant(cls, ring: RingSpec, c) -> "Poly":
        c = Fraction(c)
        return cls(ring, {ring.one(): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, ring: RingSpec, name: str) -> "Poly":
        i = ring.index(name)
        m = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls(ring, {m: Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, ring: RingSpec, m: Monomial, c=1) -> "Poly":
        return cls(ring, {tuple(m): Fraction(c)})

    @classmethod
    def parse(cls, text: str, ring: RingSpec) -> "Poly":
        from .parser import parse_poly

        return parse_poly(text, ring)

    # accessors ------------------------------------------------------------
    @property
    def term_dict(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def terms(self) -> list[tuple[Fraction, Monomial]]:
        """(coefficient, monomial) pairs, strictly descending."""
        if self._sorted is None:
            key = self.ring.order.key
            ms = sorted(self._terms, key=key, reverse=True)
            self._sorted = [(self._terms[m], m) for m in ms]
        return self._sorted

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def lm(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms()[0][1]

    def lc(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms()[0][0]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def used_variables(self) -> set[str]:
        out = set()
        for m in self._terms:
            out.update(v for v, e in zip(self.ring.variables, m) if e)
        return out

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"mismatched rings: {self.ring} vs {other.ring}")
        return other

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.ring, other)
        return self._check(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.ring)
        return Poly(self.ring, {m: v * c for m, v in self._terms.items()}, _trusted=True)

    def mul_monomial(self, u: Monomial, c=1) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.ring)
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(m, u)): v * c for m, v in self._terms.items()},
            _trusted=True,
        )

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(1 / self.lc())

    def exact_div(self, g: "Poly") -> "Poly":
        """Quotient of an exact division ``self / g``; raises if inexact."""
        self._check(g)
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        q = Poly.zero(self.ring)
        r = self
        glm, glc = g.lm(), g.lc()
        while r:
            c, m = r.terms()[0]
            if not mon_divides(glm, m):
                raise ValueError("inexact polynomial division")
            u = tuple(a - b for a, b in zip(m, glm))
            t = Poly(self.ring, {u: c / glc}, _trusted=True)
            q = q + t
            r = r - g.mul_monomial(u, c / glc)
        return q

    # ring changes ---------------------------------------------------------
    def in_ring(self, ring: RingSpec) -> "Poly":
        """Same polynomial in another ring, mapping variables by name."""
        if ring == self.ring:
            return self
        if ring.variables == self.ring.variables:
            return Poly(ring, self._terms, _trusted=True)
        idx = []
        for v in self.ring.variables:
            idx.append(ring.variables.index(v) if v in ring.variables else None)
        out = {}
        for m, c in self._terms.items():
            nm = [0] * ring.nvars
            for j, e in zip(idx, m):
                if e:
                    if j is None:
                        raise ValueError("polynomial uses a variable missing from the target ring")
                    nm[j] = e
            out[tuple(nm)] = c
        return Poly(ring, out, _trusted=True)

    # comparison and printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.ring, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (c, m) in enumerate(self.terms()):
            neg = c < 0
            a = -c if neg else c
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.variables, m) if e
            )
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def polys(ring: RingSpec, texts: Iterable[str]) -> list[Poly]:
    return [Poly.parse(t, ring) for t in texts]

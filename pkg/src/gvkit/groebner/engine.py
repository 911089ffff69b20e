"""Buchberger's algorithm on packed-key integer polynomials."""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Sequence

from .. import kernels
from ..arith import lcm_denominators
from ..poly import Monomial, Poly, RingSpec

FIELD_BITS = 20


class Encoder:
    """Packs exponent vectors into integers ordered like the monomial order.

    The order's weight rows become balanced base-``2**FIELD_BITS`` digits,
    so the packing is linear: multiplying monomials adds their keys.
    """

    def __init__(self, ring: RingSpec):
        self.ring = ring
        n = ring.nvars
        rows = ring.order.weight_rows(n)
        self.nrows = len(rows)
        base = 1 << FIELD_BITS
        self.base = base
        self.unit_keys = []
        for i in range(n):
            k = 0
            for row in rows:
                k = k * base + row[i]
            self.unit_keys.append(k)
        # for each variable: (digit index from the least significant end, sign)
        self.readers = []
        for i in range(n):
            for j, row in enumerate(rows):
                if row[i] in (1, -1) and sum(abs(v) for v in row) == 1:
                    self.readers.append((self.nrows - 1 - j, row[i]))
                    break
            else:  # pragma: no cover - every supported order has unit rows
                raise ValueError("order rows cannot be decoded")
        self._cache: dict[int, Monomial] = {}

    def encode(self, m: Monomial) -> int:
        k = 0
        for e, u in zip(m, self.unit_keys):
            if e:
                k += e * u
        return k

    def decode(self, key: int) -> Monomial:
        m = self._cache.get(key)
        if m is not None:
            return m
        half = self.base >> 1
        digits = []
        v = key
        for _ in range(self.nrows):
            d = v % self.base
            if d >= half:
                d -= self.base
            digits.append(d)
            v = (v - d) // self.base
        m = tuple(sign * digits[j] for j, sign in self.readers)
        self._cache[key] = m
        return m

    # conversions ----------------------------------------------------------
    def to_int_poly(self, f: Poly) -> dict[int, int]:
        """Primitive integer multiple of ``f`` keyed by packed monomials."""
        terms = f.term_dict
        if not terms:
            return {}
        den = lcm_denominators(terms.values())
        out = {self.encode(m): int(c * den) for m, c in terms.items()}
        return kernels.primitive(out)

    def to_poly(self, f: dict[int, int], scale: Fraction = Fraction(1)) -> Poly:
        return Poly(
            self.ring,
            {self.decode(k): scale * c for k, c in f.items() if c},
            _trusted=True,
        )

    def entry(self, f: dict[int, int]):
        lk = max(f)
        tail = [(k, c) for k, c in f.items() if k != lk]
        tail.sort(reverse=True)
        return (lk, self.decode(lk), f[lk], tail)


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


class GBStats:
    __slots__ = ("pairs", "coprime_skips", "chain_skips", "zero_reductions", "added")

    def __init__(self):
        self.pairs = self.coprime_skips = self.chain_skips = 0
        self.zero_reductions = self.added = 0

    def as_dict(self):
        return {s: getattr(self, s) for s in self.__slots__}


def _canonical_inputs(polys: Sequence[Poly], enc: Encoder) -> list[dict[int, int]]:
    ints = [enc.to_int_poly(p) for p in polys if p]
    ints = [f for f in ints if f]
    uniq = {}
    for f in ints:
        uniq[tuple(sorted(f.items(), reverse=True))] = f
    return [uniq[k] for k in sorted(uniq, reverse=True)]


def buchberger_int(polys: Sequence[Poly], ring: RingSpec, stats: GBStats | None = None):
    """Reduced Groebner basis of ``polys`` in ``ring``'s order.

    Returns monic polys sorted by descending leading monomial.
    """
    enc = Encoder(ring)
    gens = _canonical_inputs([p.in_ring(ring) for p in polys], enc)
    if not gens:
        return []
    one = enc.encode(ring.one())
    stats = stats or GBStats()
    G: list[tuple] = []
    exps: list[tuple] = []
    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def add(h: dict[int, int]):
        e = enc.entry(h)
        idx = len(G)
        for i, (deg, L) in enumerate(kernels.pair_lcms(exps, e[1])):
            heapq.heappush(heap, (deg, enc.encode(L), i, idx, L))
            pending.add((i, idx))
        G.append(e)
        exps.append(e[1])
        stats.added += 1
        return e

    for f in gens:
        h, _, _ = kernels.nf_ff(f, G, enc.decode)
        if h:
            if add(kernels.primitive(h))[0] == one:
                return [Poly.constant(ring, 1)]

    while heap:
        _, lkey, i, j, L = heapq.heappop(heap)
        pending.discard((i, j))
        stats.pairs += 1
        status = kernels.pair_status(exps, i, j, L, pending)
        if status == 1:
            stats.coprime_skips += 1
            continue
        if status == 2:
            stats.chain_skips += 1
            continue
        s = kernels.spoly_ff(G[i], G[j], lkey)
        h, _, _ = kernels.nf_ff(s, G, enc.decode)
        if not h:
            stats.zero_reductions += 1
            continue
        e = add(kernels.primitive(h))
        if e[0] == one:
            return [Poly.constant(ring, 1)]
    return _reduce_basis(G, enc)


def _reduce_basis(G, enc: Encoder) -> list[Poly]:
    keep = []
    for idx, e in enumerate(G):
        redundant = False
        for jdx, o in enumerate(G):
            if jdx == idx:
                continue
            if _divides(o[1], e[1]) and (o[1] != e[1] or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(e)
    out = []
    for idx, e in enumerate(keep):
        others = [o for j, o in enumerate(keep) if j != idx]
        tail = dict(e[3])
        r, num, den = kernels.nf_ff(tail, others, enc.decode)
        full = {e[0]: e[2] * den}
        for k, c in r.items():
            full[k] = c * num
        lc = Fraction(full[e[0]])
        out.append(enc.to_poly(full, 1 / lc))
    out.sort(key=lambda p: ring_key(p), reverse=True)
    return out


def ring_key(p: Poly):
    return p.ring.order.key(p.lm())


def basis_entries(basis: Sequence[Poly], enc: Encoder):
    return [enc.entry(enc.to_int_poly(g)) for g in basis]


def normal_form_int(f: Poly, entries, enc: Encoder) -> Poly:
    """Exact normal form of ``f`` with respect to prepared basis entries."""
    if not f:
        return f
    terms = f.term_dict
    den = lcm_denominators(terms.values())
    fi = {enc.encode(m): int(c * den) for m, c in terms.items()}
    r, num, rden = kernels.nf_ff(fi, entries, enc.decode)
    return enc.to_poly(r, Fraction(num, rden * den))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """Rational S-polynomial; monic-normalised combination of ``f`` and ``g``."""
    L = _lcm(f.lm(), g.lm())
    u = tuple(a - b for a, b in zip(L, f.lm()))
    v = tuple(a - b for a, b in zip(L, g.lm()))
    return f.mul_monomial(u, 1 / f.lc()) - g.mul_monomial(v, 1 / g.lc())

"""Independent reference routes used to cross-check the engine.

Nothing here touches the packed-key kernels: both oracles work directly on
``Poly`` objects with ``Fraction`` coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from ..poly import MonOrder, Monomial, Poly, RingSpec
from ..poly.ring import mon_divides, mon_lcm


def _reduce_full(f: Poly, G: Sequence[Poly]) -> Poly:
    ring = f.ring
    rem: dict[Monomial, Fraction] = {}
    p = f
    while p:
        c, m = p.terms()[0]
        for g in G:
            lm = g.lm()
            if mon_divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                p = p - g.mul_monomial(u, c / g.lc())
                break
        else:
            rem[m] = c
            p = p - Poly(ring, {m: c}, _trusted=True)
    return Poly(ring, rem, _trusted=True)


def naive_buchberger(gens: Sequence[Poly], ring: RingSpec | None = None) -> list[Poly]:
    """Textbook Buchberger: every pair, no criteria, then reduce.

    Output is the reduced basis (monic, sorted by descending leading
    monomial), so it can be compared term for term with the engine.
    """
    gens = [g for g in gens if g]
    if ring is not None:
        gens = [g.in_ring(ring) for g in gens]
    if not gens:
        return []
    ring = gens[0].ring
    G = [g.monic() for g in gens]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        f, g = G[i], G[j]
        L = mon_lcm(f.lm(), g.lm())
        u = tuple(a - b for a, b in zip(L, f.lm()))
        v = tuple(a - b for a, b in zip(L, g.lm()))
        s = f.mul_monomial(u) - g.mul_monomial(v)
        h = _reduce_full(s, G)
        if h:
            G.append(h.monic())
            k = len(G) - 1
            pairs.extend((i2, k) for i2 in range(k))
    # minimise, then interreduce
    minimal: list[Poly] = []
    for idx, g in enumerate(G):
        if any(
            mon_divides(o.lm(), g.lm()) and (o.lm() != g.lm() or jdx < idx)
            for jdx, o in enumerate(G)
            if jdx != idx
        ):
            continue
        minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = [o for j, o in enumerate(minimal) if j != idx]
        lead = Poly(ring, {g.lm(): Fraction(1)}, _trusted=True)
        reduced.append((lead + _reduce_full(g - lead, others)).monic())
    key = ring.order.key
    reduced.sort(key=lambda p: key(p.lm()), reverse=True)
    return reduced


def monomials_up_to(n: int, d: int) -> list[Monomial]:
    out = []
    for deg in range(d + 1):
        for combo in combinations_with_replacement(range(n), deg):
            m = [0] * n
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
    return out


class MacaulayOracle:
    """Degree-bounded ideal membership by linear algebra over Q.

    Builds the Macaulay matrix whose columns are ``m * g`` for generators
    ``g`` and monomials ``m`` of degree at most ``cofactor_degree``; ``f``
    is a member (with cofactors of that degree) iff it lies in the column
    span. The span is kept in reduced echelon form keyed by pivot monomial,
    using plain tuple comparison as the pivot order.
    """

    def __init__(self, gens: Sequence[Poly], cofactor_degree: int):
        gens = [g for g in gens if g]
        if not gens:
            raise ValueError("oracle needs at least one nonzero generator")
        self.ring = gens[0].ring
        self.cofactor_degree = cofactor_degree
        self.pivots: dict[Monomial, dict[Monomial, Fraction]] = {}
        mons = monomials_up_to(self.ring.nvars, cofactor_degree)
        self.columns = 0
        for g in gens:
            for m in mons:
                self.columns += 1
                self._insert({tuple(a + b for a, b in zip(m, gm)): c for gm, c in g.term_dict.items()})

    def _reduce(self, vec: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        vec = dict(vec)
        done: dict[Monomial, Fraction] = {}
        while vec:
            m = max(vec)
            c = vec.pop(m)
            row = self.pivots.get(m)
            if row is None:
                done[m] = c
                continue
            for k, v in row.items():
                if k == m:
                    continue
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return done

    def _insert(self, vec):
        r = self._reduce(vec)
        if not r:
            return
        p = max(r)
        inv = 1 / r[p]
        self.pivots[p] = {k: v * inv for k, v in r.items()}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, f: Poly) -> bool:
        f = f.in_ring(self.ring)
        return not self._reduce(dict(f.term_dict))

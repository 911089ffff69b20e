"""Pure-Python hot kernels (fallback when the compiled module is absent).

Polynomials here are ``dict[key, int]`` where ``key`` is the packed order
key of the monomial: an integer whose natural order is the monomial order
and which is additive under monomial multiplication. Basis entries are
tuples ``(lead_key, lead_exps, lead_coeff, tail)`` with ``tail`` a list of
``(key, coeff)`` pairs excluding the leading term.

Finite submodules are bitmasks over element indices (at most 64 elements).
"""

from __future__ import annotations

import math

BACKEND = "python"


# --- polynomial reduction -------------------------------------------------

def nf_ff(f, basis, exps_of):
    """Fully reduce ``f`` modulo ``basis`` without fractions.

    Returns ``(rem, num, den)`` such that the true normal form equals
    ``rem * num / den``. ``exps_of`` maps a key to its exponent tuple.
    """
    f = dict(f)
    rem = {}
    num, den = 1, 1
    while f:
        m = max(f)
        c = f[m]
        em = exps_of(m)
        g = None
        for entry in basis:
            le = entry[1]
            ok = True
            for x, y in zip(le, em):
                if x > y:
                    ok = False
                    break
            if ok:
                g = entry
                break
        if g is None:
            rem[m] = c
            del f[m]
            continue
        lk, _, lc, tail = g
        d = math.gcd(c, lc)
        a = lc // d
        b = c // d
        if a < 0:
            a, b = -a, -b
        del f[m]
        if a != 1:
            for k in f:
                f[k] *= a
            for k in rem:
                rem[k] *= a
            den *= a
        q = m - lk
        for tk, tc in tail:
            k = tk + q
            v = f.get(k, 0) - b * tc
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    if rem:
        cont = 0
        for v in rem.values():
            cont = math.gcd(cont, v)
            if cont == 1:
                break
        if cont > 1:
            for k in rem:
                rem[k] //= cont
            num *= cont
        g = math.gcd(num, den)
        num //= g
        den //= g
    return rem, num, den


def primitive(f):
    """Divide by content and make the leading coefficient positive."""
    if not f:
        return f
    cont = 0
    for v in f.values():
        cont = math.gcd(cont, v)
        if cont == 1:
            break
    if f[max(f)] < 0:
        cont = -cont
    if cont == 1:
        return dict(f)
    return {k: v // cont for k, v in f.items()}


def spoly_ff(g1, g2, lcm_key):
    """Fraction-free S-polynomial of two basis entries."""
    lk1, _, lc1, tail1 = g1
    lk2, _, lc2, tail2 = g2
    d = math.gcd(lc1, lc2)
    a = lc2 // d
    b = lc1 // d
    q1 = lcm_key - lk1
    q2 = lcm_key - lk2
    out = {}
    for k, c in tail1:
        out[k + q1] = a * c
    for k, c in tail2:
        kk = k + q2
        v = out.get(kk, 0) - b * c
        if v:
            out[kk] = v
        else:
            out.pop(kk, None)
    return out


# --- finite module bitmasks ----------------------------------------------

class Tables:
    """Addition and scalar-action tables of a finite module."""

    __slots__ = ("add", "act", "m", "n")

    def __init__(self, add, act):
        self.add = [list(map(int, row)) for row in add]
        self.act = [list(map(int, row)) for row in act]
        self.m = len(self.add)
        self.n = len(self.act)


def pair_lcms(exps, e):
    """``(degree, lcm)`` of ``e`` with each earlier leading exponent."""
    out = []
    for o in exps:
        L = tuple(x if x > y else y for x, y in zip(o, e))
        out.append((sum(L), L))
    return out


def pair_status(exps, i, j, L, pending):
    """0 = reduce the pair, 1 = coprime skip, 2 = chain-criterion skip."""
    a, b = exps[i], exps[j]
    for x, y in zip(a, b):
        if x and y:
            break
    else:
        return 1
    for k, e in enumerate(exps):
        if k == i or k == j:
            continue
        for x, y in zip(e, L):
            if x > y:
                break
        else:
            if ((i, k) if i < k else (k, i)) in pending or ((j, k) if j < k else (k, j)) in pending:
                continue
            return 2
    return 0


def make_tables(add, act):
    if len(add) > 64:
        raise ValueError("bitmask kernels support at most 64 elements")
    return Tables(add, act)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sumset(t, a, b):
    add = t.add
    out = 0
    bl = list(_bits(b))
    for i in _bits(a):
        row = add[i]
        for j in bl:
            out |= 1 << row[j]
    return out


def scalar_image(t, s, a):
    row = t.act[s]
    out = 0
    for i in _bits(a):
        out |= 1 << row[i]
    return out


def cyclic(t, x):
    out = 0
    for row in t.act:
        out |= 1 << row[x]
    return out


def span(t, a):
    out = 1  # element 0 is the zero of the module
    for x in _bits(a):
        if not (out >> x) & 1:
            out = sumset(t, out, cyclic(t, x))
    return out


def ann_module(t, ring_mask):
    """Elements killed by every ring element in ``ring_mask``."""
    out = 0
    rows = [t.act[s] for s in _bits(ring_mask)]
    for x in range(t.m):
        if all(row[x] == 0 for row in rows):
            out |= 1 << x
    return out


def ann_ring(t, mod_mask):
    """Ring elements killing every module element in ``mod_mask``."""
    out = 0
    xs = list(_bits(mod_mask))
    for s, row in enumerate(t.act):
        if all(row[x] == 0 for x in xs):
            out |= 1 << s
    return out


def colon(t, ring_mask, target):
    """Module elements ``x`` with ``j*x`` in ``target`` for every ``j``."""
    out = 0
    rows = [t.act[s] for s in _bits(ring_mask)]
    for x in range(t.m):
        if all((target >> row[x]) & 1 for row in rows):
            out |= 1 << x
    return out


def popcount(mask):
    return bin(mask).count("1")

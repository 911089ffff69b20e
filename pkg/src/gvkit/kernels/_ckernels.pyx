# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and semantics as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from math import gcd

BACKEND = "cython"


def nf_ff(f, list basis, exps_of):
    cdef dict fd = dict(f)
    cdef dict rem = {}
    cdef tuple le, em, entry
    cdef object m, c, g, lk, lc, tail, d, a, b, q, k, v, tk, tc, num, den, cont
    cdef Py_ssize_t i, nb = len(basis), nv
    cdef bint ok
    num = 1
    den = 1
    while fd:
        m = max(fd)
        c = fd[m]
        em = exps_of(m)
        nv = len(em)
        g = None
        for j in range(nb):
            entry = <tuple>basis[j]
            le = <tuple>entry[1]
            ok = True
            for i in range(nv):
                if <long>le[i] > <long>em[i]:
                    ok = False
                    break
            if ok:
                g = entry
                break
        if g is None:
            rem[m] = c
            del fd[m]
            continue
        lk, _, lc, tail = g
        d = gcd(c, lc)
        a = lc // d
        b = c // d
        if a < 0:
            a = -a
            b = -b
        del fd[m]
        if a != 1:
            for k in list(fd):
                fd[k] = fd[k] * a
            for k in list(rem):
                rem[k] = rem[k] * a
            den = den * a
        q = m - lk
        for tk, tc in tail:
            k = tk + q
            v = fd.get(k, 0) - b * tc
            if v:
                fd[k] = v
            else:
                fd.pop(k, None)
    if rem:
        cont = 0
        for v in rem.values():
            cont = gcd(cont, v)
            if cont == 1:
                break
        if cont > 1:
            for k in list(rem):
                rem[k] = rem[k] // cont
            num = num * cont
        g = gcd(num, den)
        num = num // g
        den = den // g
    return rem, num, den


def primitive(dict f):
    if not f:
        return f
    cont = 0
    for v in f.values():
        cont = gcd(cont, v)
        if cont == 1:
            break
    if f[max(f)] < 0:
        cont = -cont
    if cont == 1:
        return dict(f)
    return {k: v // cont for k, v in f.items()}


def spoly_ff(tuple g1, tuple g2, lcm_key):
    lk1, _, lc1, tail1 = g1
    lk2, _, lc2, tail2 = g2
    d = gcd(lc1, lc2)
    a = lc2 // d
    b = lc1 // d
    q1 = lcm_key - lk1
    q2 = lcm_key - lk2
    cdef dict out = {}
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


def pair_lcms(list exps, tuple e):
    cdef list out = []
    cdef tuple o
    cdef Py_ssize_t i, n = len(e)
    cdef long x, y, d
    for o in exps:
        L = [0] * n
        d = 0
        for i in range(n):
            x = <long>o[i]
            y = <long>e[i]
            if y > x:
                x = y
            L[i] = x
            d += x
        out.append((d, tuple(L)))
    return out


def pair_status(list exps, Py_ssize_t i, Py_ssize_t j, tuple L, set pending):
    cdef tuple a = <tuple>exps[i], b = <tuple>exps[j], e
    cdef Py_ssize_t k, t, n = len(L), nk = len(exps)
    cdef bint ok
    ok = True
    for t in range(n):
        if <long>a[t] and <long>b[t]:
            ok = False
            break
    if ok:
        return 1
    for k in range(nk):
        if k == i or k == j:
            continue
        e = <tuple>exps[k]
        ok = True
        for t in range(n):
            if <long>e[t] > <long>L[t]:
                ok = False
                break
        if ok:
            if ((i, k) if i < k else (k, i)) in pending or ((j, k) if j < k else (k, j)) in pending:
                continue
            return 2
    return 0


cdef class Tables:
    cdef public int64_t[:, ::1] add
    cdef public int64_t[:, ::1] act
    cdef public Py_ssize_t m, n

    def __init__(self, add, act):
        self.add = np.ascontiguousarray(add, dtype=np.int64)
        self.act = np.ascontiguousarray(act, dtype=np.int64)
        self.m = self.add.shape[0]
        self.n = self.act.shape[0]


def make_tables(add, act):
    if len(add) > 64:
        raise ValueError("bitmask kernels support at most 64 elements")
    return Tables(add, act)


cdef inline uint64_t _bit(int64_t i):
    return (<uint64_t>1) << i


cdef uint64_t _sumset(Tables t, uint64_t a, uint64_t b):
    cdef uint64_t out = 0, bb
    cdef Py_ssize_t i, j
    for i in range(t.m):
        if (a >> i) & 1:
            bb = b
            j = 0
            while bb:
                if bb & 1:
                    out |= _bit(t.add[i, j])
                bb >>= 1
                j += 1
    return out


cdef uint64_t _cyclic(Tables t, Py_ssize_t x):
    cdef uint64_t out = 0
    cdef Py_ssize_t s
    for s in range(t.n):
        out |= _bit(t.act[s, x])
    return out


def sumset(Tables t, uint64_t a, uint64_t b):
    return _sumset(t, a, b)


def scalar_image(Tables t, Py_ssize_t s, uint64_t a):
    cdef uint64_t out = 0
    cdef Py_ssize_t i
    for i in range(t.m):
        if (a >> i) & 1:
            out |= _bit(t.act[s, i])
    return out


def cyclic(Tables t, Py_ssize_t x):
    return _cyclic(t, x)


def span(Tables t, uint64_t a):
    cdef uint64_t out = 1
    cdef Py_ssize_t x
    for x in range(t.m):
        if (a >> x) & 1 and not ((out >> x) & 1):
            out = _sumset(t, out, _cyclic(t, x))
    return out


def ann_module(Tables t, uint64_t ring_mask):
    cdef uint64_t out = 0
    cdef Py_ssize_t x, s
    cdef bint ok
    for x in range(t.m):
        ok = True
        for s in range(t.n):
            if (ring_mask >> s) & 1 and t.act[s, x] != 0:
                ok = False
                break
        if ok:
            out |= _bit(x)
    return out


def ann_ring(Tables t, uint64_t mod_mask):
    cdef uint64_t out = 0
    cdef Py_ssize_t x, s
    cdef bint ok
    for s in range(t.n):
        ok = True
        for x in range(t.m):
            if (mod_mask >> x) & 1 and t.act[s, x] != 0:
                ok = False
                break
        if ok:
            out |= _bit(s)
    return out


def colon(Tables t, uint64_t ring_mask, uint64_t target):
    cdef uint64_t out = 0
    cdef Py_ssize_t x, s
    cdef bint ok
    for x in range(t.m):
        ok = True
        for s in range(t.n):
            if (ring_mask >> s) & 1 and not ((target >> t.act[s, x]) & 1):
                ok = False
                break
        if ok:
            out |= _bit(x)
    return out


def popcount(uint64_t mask):
    cdef int c = 0
    while mask:
        mask &= mask - 1
        c += 1
    return c

"""Explicit finite commutative rings and finite modules.

Elements are indices ``0..n-1`` with index 0 always the zero element, so
submodules can be stored as bitmasks (bit ``i`` set iff element ``i`` is a
member) and handed straight to the kernels.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .. import kernels

DEFAULT_MAX_SIZE = 64


class RingSizeError(ValueError):
    pass


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << int(e)
    return m


def _check_axioms(add: np.ndarray, mul: np.ndarray, one: int, sample: int | None = None):
    n = add.shape[0]
    if sample is None:
        a = np.arange(n)[:, None, None]
        b = np.arange(n)[None, :, None]
        c = np.arange(n)[None, None, :]
    else:
        rng = np.random.default_rng(0)
        a, b, c = (rng.integers(0, n, sample) for _ in range(3))
    checks = {
        "additive associativity": np.array_equal(add[add[a, b], c], add[a, add[b, c]]),
        "multiplicative associativity": np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]),
        "distributivity": np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
        "additive commutativity": np.array_equal(add, add.T),
        "commutativity": np.array_equal(mul, mul.T),
        "additive identity": np.array_equal(add[0], np.arange(n)),
        "multiplicative identity": np.array_equal(mul[one], np.arange(n)),
        "additive inverses": bool(np.all((add == 0).any(axis=1))),
    }
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        raise ValueError(f"ring axioms fail: {', '.join(bad)}")


@dataclass(eq=False)
class FinRing:
    """Finite commutative ring given by addition and multiplication tables."""

    name: str
    labels: list[str]
    add: np.ndarray
    mul: np.ndarray
    one: int
    spec: dict = field(default_factory=dict)

    def __post_init__(self):
        self.add = np.asarray(self.add, dtype=np.int64)
        self.mul = np.asarray(self.mul, dtype=np.int64)
        self.neg = np.array([int(np.nonzero(self.add[i] == 0)[0][0]) for i in range(self.size)], dtype=np.int64)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def zero(self) -> int:
        return 0

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __repr__(self):
        return f"FinRing({self.name}, size={self.size})"

    def element(self, label: str) -> int:
        return self.labels.index(label)

    def units(self) -> int:
        return mask_of(i for i in range(self.size) if (self.mul[i] == self.one).any())

    @cached_property
    def regular(self) -> "FinModule":
        return FinModule(self, f"{self.name} (regular)", self.labels, self.add, self.mul)

    def ideals(self) -> list["FinIdeal"]:
        return [FinIdeal(self, m) for m in self.regular.submodules()]

    def ideal(self, gens: Sequence[int | str]) -> "FinIdeal":
        idx = [self.element(g) if isinstance(g, str) else int(g) for g in gens]
        return FinIdeal(self, self.regular.span(mask_of(idx)))

    def ideal_product(self, a: int, b: int) -> int:
        prods = mask_of(self.mul[i, j] for i in bits(a) for j in bits(b))
        return self.regular.span(prods)

    def is_prime(self, p: int) -> bool:
        if p == self.full_mask:
            return False
        outside = [i for i in range(self.size) if not (p >> i) & 1]
        for a in outside:
            for b in outside:
                if (p >> int(self.mul[a, b])) & 1:
                    return False
        return True


@dataclass(frozen=True)
class FinIdeal:
    ring: FinRing
    mask: int

    @property
    def members(self) -> list[int]:
        return bits(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def label(self) -> str:
        return describe_submodule(self.ring.regular, self.mask)


@dataclass(eq=False)
class FinModule:
    """Finite module: abelian group table plus the ring action table."""

    ring: FinRing
    name: str
    labels: list[str]
    add: np.ndarray
    act: np.ndarray

    def __post_init__(self):
        self.add = np.asarray(self.add, dtype=np.int64)
        self.act = np.asarray(self.act, dtype=np.int64)
        self._subs = None

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __repr__(self):
        return f"FinModule({self.name}, size={self.size})"

    @cached_property
    def tables(self):
        return kernels.make_tables(self.add, self.act)

    def verify(self):
        R = self.ring
        m = self.size
        x = np.arange(m)
        ok = (
            np.array_equal(self.act[R.one], x)
            and np.array_equal(self.add, self.add.T)
            and np.array_equal(self.add[0], x)
            and np.array_equal(self.act[0], np.zeros(m, dtype=np.int64))
        )
        r = np.arange(R.size)[:, None, None]
        s = np.arange(R.size)[None, :, None]
        xx = x[None, None, :]
        ok = ok and np.array_equal(self.act[R.mul[r, s], xx], self.act[r, self.act[s, xx]])
        ok = ok and np.array_equal(self.act[R.add[r, s], xx], self.add[self.act[r, xx], self.act[s, xx]])
        a = x[:, None, None]
        b = x[None, :, None]
        c = x[None, None, :]
        ok = ok and np.array_equal(self.add[self.add[a, b], c], self.add[a, self.add[b, c]])
        rr = np.arange(R.size)[:, None, None]
        ok = ok and np.array_equal(
            self.act[rr, self.add[x[None, :, None], x[None, None, :]]],
            self.add[self.act[rr, x[None, :, None]], self.act[rr, x[None, None, :]]],
        )
        if not ok:
            raise ValueError(f"module axioms fail for {self.name}")
        return True

    # submodule calculus --------------------------------------------------
    def span(self, mask: int) -> int:
        return kernels.span(self.tables, mask)

    def is_submodule(self, mask: int) -> bool:
        return mask & 1 == 1 and self.span(mask) == mask

    def submodules(self) -> list[int]:
        """All submodules, sorted by size then mask."""
        if self._subs is None:
            t = self.tables
            cyc = sorted({kernels.cyclic(t, x) for x in range(self.size)})
            seen = {1}
            frontier = [1]
            while frontier:
                nxt = []
                for s in frontier:
                    for c in cyc:
                        if c & ~s:
                            u = kernels.sumset(t, s, c)
                            if u not in seen:
                                seen.add(u)
                                nxt.append(u)
                frontier = nxt
            self._subs = sorted(seen, key=lambda m: (bin(m).count("1"), m))
        return self._subs

    def sum(self, a: int, b: int) -> int:
        return kernels.sumset(self.tables, a, b)

    def scalar_image(self, s: int, a: int) -> int:
        return kernels.scalar_image(self.tables, s, a)

    def annihilator(self, ideal_mask: int) -> int:
        """``(0 :_M I)``."""
        return kernels.ann_module(self.tables, ideal_mask)

    def ring_annihilator(self, mask: int | None = None) -> int:
        """``(0 :_R N)`` for the submodule ``N`` (default: all of M)."""
        return kernels.ann_ring(self.tables, self.full_mask if mask is None else mask)

    def colon(self, ideal_mask: int, target: int) -> int:
        """Elements ``x`` with ``I x`` inside ``target``."""
        return kernels.colon(self.tables, ideal_mask, target)

    def quotient(self, sub: int) -> "FinModule":
        """``M / N`` with cosets indexed in order of their least element."""
        if not self.is_submodule(sub):
            raise ValueError("not a submodule")
        members = bits(sub)
        coset_of = [-1] * self.size
        reps = []
        for x in range(self.size):
            if coset_of[x] < 0:
                idx = len(reps)
                reps.append(x)
                for y in members:
                    coset_of[int(self.add[x, y])] = idx
        k = len(reps)
        add = [[coset_of[int(self.add[reps[i], reps[j]])] for j in range(k)] for i in range(k)]
        act = [[coset_of[int(self.act[s, reps[i]])] for i in range(k)] for s in range(self.ring.size)]
        labels = [f"{self.labels[r]}+N" for r in reps]
        return FinModule(self.ring, f"{self.name}/{describe_submodule(self, sub)}", labels, add, act)


def describe_submodule(M: FinModule, mask: int) -> str:
    """Short label: the members if few, otherwise a generating set."""
    members = bits(mask)
    if len(members) <= 4:
        return "{" + ", ".join(M.labels[i] for i in members) + "}"
    gens: list[int] = []
    cur = 1
    for x in sorted(members, key=lambda x: -bin(M.span(1 << x)).count("1")):
        if not (cur >> x) & 1:
            gens.append(x)
            cur = M.span(cur | (1 << x))
        if cur == mask:
            break
    return "<" + ", ".join(M.labels[i] for i in sorted(gens)) + ">"


# --- ring constructors ------------------------------------------------------

def zn(n: int) -> FinRing:
    if n < 1:
        raise ValueError("modulus must be positive")
    x = np.arange(n)
    return FinRing(
        f"Z/{n}",
        [str(i) for i in range(n)],
        (x[:, None] + x[None, :]) % n,
        (x[:, None] * x[None, :]) % n,
        1 % n,
        {"kind": "Zn", "n": n},
    )


def product(A: FinRing, B: FinRing) -> FinRing:
    na, nb = A.size, B.size
    i = np.arange(na * nb)
    a, b = i // nb, i % nb
    add = A.add[a[:, None], a[None, :]] * nb + B.add[b[:, None], b[None, :]]
    mul = A.mul[a[:, None], a[None, :]] * nb + B.mul[b[:, None], b[None, :]]
    labels = [f"({A.labels[p]},{B.labels[q]})" for p, q in zip(a, b)]
    return FinRing(
        f"{A.name} x {B.name}",
        labels,
        add,
        mul,
        A.one * nb + B.one,
        {"kind": "product", "factors": [A.spec, B.spec]},
    )


def _poly_label(coeffs: Sequence[int]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        parts.append(str(c) if k == 0 else (mon if c == 1 else f"{c}{mon}"))
    return "+".join(parts) or "0"


def poly_quotient(n: int, modulus: Sequence[int]) -> FinRing:
    """Z/n[x]/(f) for monic ``f`` given by coefficients low to high."""
    modulus = [int(c) % n for c in modulus]
    deg = len(modulus) - 1
    if deg < 1:
        raise ValueError("modulus polynomial must have degree at least 1")
    if modulus[-1] != 1 % n:
        raise ValueError("modulus polynomial must be monic")
    size = n**deg
    elems = list(itertools.product(range(n), repeat=deg))
    elems = [tuple(reversed(e)) for e in elems]  # coefficient vectors, low first
    index = {e: sum(c * n**k for k, c in enumerate(e)) for e in elems}
    order = sorted(elems, key=lambda e: index[e])

    def reduce(prod_coeffs):
        c = list(prod_coeffs)
        for k in range(len(c) - 1, deg - 1, -1):
            lead = c[k] % n
            if lead:
                for j in range(deg + 1):
                    c[k - deg + j] -= lead * modulus[j]
            c[k] = 0
        return tuple(v % n for v in c[:deg])

    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for e in order:
        for f in order:
            s = tuple((a + b) % n for a, b in zip(e, f))
            p = [0] * (2 * deg - 1)
            for i, a in enumerate(e):
                for j, b in enumerate(f):
                    p[i + j] += a * b
            add[index[e], index[f]] = index[s]
            mul[index[e], index[f]] = index[reduce(p)]
    one = index[tuple([1 % n] + [0] * (deg - 1))]
    return FinRing(
        f"Z/{n}[x]/({_poly_display(modulus)})",
        [_poly_label(e) for e in order],
        add,
        mul,
        one,
        {"kind": "poly", "n": n, "modulus": modulus},
    )


def _poly_display(coeffs: Sequence[int]) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            parts.append(str(c))
        else:
            parts.append(mon if c == 1 else f"{c}*{mon}")
    return "+".join(parts)


_ZN = re.compile(r"^Z/(\d+)$")
_POLY = re.compile(r"^Z/(\d+)\[x\]/\((.+)\)$")
_TERM = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def _parse_modulus(text: str) -> list[int]:
    coeffs: dict[int, int] = {}
    for raw in text.replace(" ", "").replace("-", "+-").split("+"):
        if not raw:
            continue
        sign = -1 if raw.startswith("-") else 1
        raw = raw.lstrip("-")
        m = _TERM.match(raw)
        if not m or not raw:
            raise ValueError(f"cannot parse modulus term {raw!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[k] = coeffs.get(k, 0) + sign * c
    deg = max(coeffs)
    return [coeffs.get(k, 0) for k in range(deg + 1)]


def parse_ring_spec(spec) -> dict:
    """Normalise a string or dict ring spec to its dict form."""
    if isinstance(spec, dict):
        return spec
    text = str(spec).strip()
    if " x " in text:
        return {"kind": "product", "factors": [parse_ring_spec(p) for p in text.split(" x ")]}
    m = _ZN.match(text)
    if m:
        return {"kind": "Zn", "n": int(m.group(1))}
    m = _POLY.match(text)
    if m:
        return {"kind": "poly", "n": int(m.group(1)), "modulus": _parse_modulus(m.group(2))}
    raise ValueError(f"unrecognised ring spec {spec!r}")


def spec_size(spec: dict) -> int:
    kind = spec.get("kind")
    if kind == "Zn":
        return int(spec["n"])
    if kind == "product":
        out = 1
        for f in spec["factors"]:
            out *= spec_size(f)
        return out
    if kind == "poly":
        return int(spec["n"]) ** (len(spec["modulus"]) - 1)
    raise ValueError(f"unknown ring kind {kind!r}")


def build_ring(spec, max_size: int = DEFAULT_MAX_SIZE) -> FinRing:
    """Construct a ring from its spec and verify the ring axioms."""
    spec = parse_ring_spec(spec)
    size = spec_size(spec)
    if size > max_size:
        raise RingSizeError(f"ring {spec} has {size} elements, above the bound {max_size}")
    R = _build(spec)
    _check_axioms(R.add, R.mul, R.one, sample=None if R.size <= 64 else 20000)
    return R


def _build(spec: dict) -> FinRing:
    kind = spec["kind"]
    if kind == "Zn":
        return zn(int(spec["n"]))
    if kind == "product":
        factors = [_build(f) for f in spec["factors"]]
        if len(factors) < 2:
            raise ValueError("a product needs at least two factors")
        acc = factors[0]
        for f in factors[1:]:
            acc = product(acc, f)
        return acc
    if kind == "poly":
        return poly_quotient(int(spec["n"]), spec["modulus"])
    raise ValueError(f"unknown ring kind {kind!r}")


# --- module constructors ------------------------------------------------------

def quotient_module(R: FinRing, ideal_mask: int) -> FinModule:
    """R/I as an R-module."""
    M = R.regular.quotient(ideal_mask)
    M.name = f"{R.name}/{describe_submodule(R.regular, ideal_mask)}"
    return M


def direct_sum(A: FinModule, B: FinModule) -> FinModule:
    if A.ring is not B.ring:
        raise ValueError("modules over different rings")
    na, nb = A.size, B.size
    i = np.arange(na * nb)
    a, b = i // nb, i % nb
    add = A.add[a[:, None], a[None, :]] * nb + B.add[b[:, None], b[None, :]]
    act = A.act[:, a] * nb + B.act[:, b]
    labels = [f"({A.labels[p]},{B.labels[q]})" for p, q in zip(a, b)]
    return FinModule(A.ring, f"{A.name} + {B.name}", labels, add, act)


def zero_module(R: FinRing) -> FinModule:
    return FinModule(R, "0", ["0"], [[0]], [[0] for _ in range(R.size)])

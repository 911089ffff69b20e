"""GV ideals, w-closures and the cofinite-generation predicates on finite modules.

Everything here is brute force over explicit tables.  Submodules are
bitmasks; see :mod:`gvkit.finlab.structures`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .structures import FinIdeal, FinModule, FinRing, bits, describe_submodule

HOM_TUPLE_LIMIT = 1 << 18
FAMILY_EXHAUSTIVE_LIMIT = 12
FAMILY_SAMPLES = 3000


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _as_mask(x) -> int:
    return x.mask if isinstance(x, FinIdeal) else int(x)


# --- Hom_R(J, R) -------------------------------------------------------------

@dataclass
class HomReport:
    generators: list[int]
    hom_count: int
    natural_kernel: int
    natural_image_count: int
    bijective: bool


def ideal_generators(R: FinRing, J: int) -> list[int]:
    """A small generating set of ``J``, chosen greedily by cyclic size."""
    M = R.regular
    cur, gens = 1, []
    for x in sorted(bits(J), key=lambda x: (-popcount(M.span(1 << x)), x)):
        if cur == J:
            break
        if not (cur >> x) & 1:
            gens.append(x)
            cur = M.span(cur | (1 << x))
    return gens


def hom_to_ring(R: FinRing, J) -> HomReport:
    """``Hom_R(J, R)`` by brute force and the natural map ``R -> Hom_R(J, R)``.

    A homomorphism is determined by the images ``y_i`` of generators ``g_i``;
    a candidate tuple is accepted iff ``sum r_i g_i -> sum r_i y_i`` is well
    defined over all coefficient tuples.  Candidates are prefiltered by
    ``ann(g_i) y_i = 0``.
    """
    J = _as_mask(J)
    gens = ideal_generators(R, J)
    n, k = R.size, len(gens)
    if k == 0:
        # Hom(0, R) = 0; the natural map is onto a point.
        return HomReport([], 1, R.full_mask, 1, n == 1)
    if n**k > HOM_TUPLE_LIMIT:
        raise ValueError(f"Hom brute force too large: {n}^{k} coefficient tuples")
    add, mul = R.add, R.mul
    coeffs = np.array(list(itertools.product(range(n), repeat=k)), dtype=np.int64)

    def combine(images):
        acc = np.zeros(len(coeffs), dtype=np.int64)
        for i, y in enumerate(images):
            acc = add[acc, mul[coeffs[:, i], y]]
        return acc

    X = combine(gens)
    cands = []
    for g in gens:
        ann = [s for s in range(n) if mul[s, g] == 0]
        cands.append([y for y in range(n) if all(mul[s, y] == 0 for s in ann)])
    homs = set()
    phi = np.full(n, -1, dtype=np.int64)
    for ys in itertools.product(*cands):
        V = combine(ys)
        phi[:] = -1
        phi[X] = V
        if np.array_equal(phi[X], V):
            homs.add(tuple(ys))
    natural = [tuple(int(mul[r, g]) for g in gens) for r in range(n)]
    kernel = 0
    for r, img in enumerate(natural):
        if all(v == 0 for v in img):
            kernel |= 1 << r
    image = set(natural)
    bij = kernel == 1 and image == homs
    return HomReport(gens, len(homs), kernel, len(image), bij)


def ideal_label(R: FinRing, J: int) -> str:
    """``(g1, g2, ...)`` with ``(1)`` for the unit ideal and ``(0)`` for zero."""
    if J == R.full_mask:
        return "(1)"
    return "(" + ", ".join(R.labels[g] for g in ideal_generators(R, J)) + ")" if J != 1 else "(0)"


def is_gv_ideal(R: FinRing, J) -> bool:
    return hom_to_ring(R, J).bijective


@dataclass
class GVSet:
    ring: FinRing
    ideals: list[int]

    def labels(self) -> list[str]:
        return [ideal_label(self.ring, m) for m in self.ideals]

    def is_trivial(self) -> bool:
        return self.ideals == [self.ring.full_mask]


_GV_CACHE: dict[int, GVSet] = {}


def gv_set(R: FinRing) -> GVSet:
    key = id(R)
    hit = _GV_CACHE.get(key)
    if hit is not None and hit.ring is R:
        return hit
    out = GVSet(R, [J for J in R.regular.submodules() if is_gv_ideal(R, J)])
    _GV_CACHE[key] = out
    return out


# --- closures ------------------------------------------------------------------

def gv_torsion(M: FinModule, gv: GVSet | None = None) -> int:
    gv = gv or gv_set(M.ring)
    out = 0
    for J in gv.ideals:
        out |= M.annihilator(J)
    if not M.is_submodule(out):
        raise AssertionError("GV-torsion is not a submodule")
    return out


def w_closure_in(M: FinModule, N: int, gv: GVSet | None = None) -> int:
    """``{x in M : Jx ⊆ N for some GV ideal J}``."""
    gv = gv or gv_set(M.ring)
    out = 0
    for J in gv.ideals:
        out |= M.colon(J, N)
    return out


def w_closed_submodules(M: FinModule, gv: GVSet | None = None) -> list[int]:
    gv = gv or gv_set(M.ring)
    return [N for N in M.submodules() if w_closure_in(M, N, gv) == N]


def is_w_module(M: FinModule, gv: GVSet | None = None) -> bool:
    """Finite surrogate: torsion-free and every submodule is its own closure."""
    gv = gv or gv_set(M.ring)
    return gv_torsion(M, gv) == 1 and all(w_closure_in(M, N, gv) == N for N in M.submodules())


def is_w_ideal(R: FinRing, I, gv: GVSet | None = None) -> bool:
    I = _as_mask(I)
    return w_closure_in(R.regular, I, gv) == I


def m_bracket_p(M: FinModule, p) -> int:
    """``M[p]``: intersection over ``s`` outside ``p`` of ``s (0:_M p)``."""
    R = M.ring
    p = _as_mask(p)
    if not R.regular.is_submodule(p) or not R.is_prime(p):
        raise ValueError("p is not a prime ideal")
    base = M.annihilator(p)
    out = M.full_mask
    for s in range(R.size):
        if not (p >> s) & 1:
            out &= M.scalar_image(s, base)
    return out


def prime_ideals(R: FinRing) -> list[int]:
    return [p for p in R.regular.submodules() if R.is_prime(p)]


# --- w-cofinitely generated ----------------------------------------------------

def _families(items: list[int], seed: int = 0):
    if len(items) <= FAMILY_EXHAUSTIVE_LIMIT:
        for r in range(1, len(items) + 1):
            yield from itertools.combinations(items, r)
        return
    for pair in itertools.combinations(items, 2):
        yield pair
    rng = random.Random(seed)
    for _ in range(FAMILY_SAMPLES):
        r = rng.randint(1, len(items))
        yield tuple(rng.sample(items, r))


def _meet(family) -> int:
    return reduce(lambda a, b: a & b, family)


def wcg_finite_subfamily(M: FinModule, gv: GVSet | None = None) -> bool:
    """Every family of w-closed submodules meeting in 0 has a finite subfamily meeting in 0.

    On a finite module the family is itself finite; evaluated literally by
    shrinking each zero-meet family to a minimal zero-meet subfamily.
    """
    closed = w_closed_submodules(M, gv)
    for fam in _families(closed):
        if _meet(fam) != 1:
            continue
        sub = list(fam)
        for N in list(sub):
            rest = [x for x in sub if x != N]
            if rest and _meet(rest) == 1:
                sub = rest
        if _meet(sub) != 1:
            return False
    return True


def _directed(fam) -> bool:
    for a, b in itertools.combinations(fam, 2):
        both = a & b
        if not any((c & both) == c for c in fam):
            return False
    return True


def wcg_inverse_system(M: FinModule, gv: GVSet | None = None) -> bool:
    """Every downward-directed family of nonzero w-closed submodules has a nonzero w-closed lower bound."""
    gv = gv or gv_set(M.ring)
    nonzero = [N for N in w_closed_submodules(M, gv) if N != 1]
    for fam in _families(nonzero, seed=1):
        if not _directed(fam):
            continue
        meet = _meet(fam)
        bound = [N for N in nonzero if (N & meet) == N]
        if not bound:
            return False
    return True


@dataclass
class WCGVerdict:
    finite_subfamily: bool
    inverse_system: bool

    @property
    def agree(self) -> bool:
        return self.finite_subfamily == self.inverse_system

    @property
    def value(self) -> bool:
        return self.finite_subfamily and self.inverse_system

    def __bool__(self):
        return self.value


def is_w_cofinitely_generated(M: FinModule, gv: GVSet | None = None) -> WCGVerdict:
    return WCGVerdict(wcg_finite_subfamily(M, gv), wcg_inverse_system(M, gv))


# --- reports ------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)

    def to_json(self):
        return {"name": self.name, "pass": self.passed, "witnesses": self.witnesses}


def check_lemma_2_1(M: FinModule, gv: GVSet | None = None) -> CheckResult:
    """``(0:_M I)`` is w-closed in ``M`` for every ideal ``I``."""
    R = M.ring
    gv = gv or gv_set(R)
    if not is_w_module(M, gv):
        return CheckResult("annihilators_w_closed", True, [{"skipped": "module fails the w-module precondition"}])
    bad = []
    for I in R.regular.submodules():
        A = M.annihilator(I)
        if w_closure_in(M, A, gv) != A:
            bad.append({"ideal": ideal_label(R, I)})
    return CheckResult("annihilators_w_closed", not bad, bad)


def check_m_bracket(M: FinModule) -> CheckResult:
    bad = []
    for p in prime_ideals(M.ring):
        mp = m_bracket_p(M, p)
        if not M.is_submodule(mp) or mp & ~M.annihilator(p):
            bad.append({"prime": ideal_label(M.ring, p)})
    return CheckResult("m_bracket_in_annihilator", not bad, bad)


def check_closure_operator(M: FinModule, gv: GVSet | None = None) -> CheckResult:
    gv = gv or gv_set(M.ring)
    subs = M.submodules()
    cl = {N: w_closure_in(M, N, gv) for N in subs}
    bad = []
    for N, C in cl.items():
        if N & ~C:
            bad.append({"extensive": describe_submodule(M, N)})
        if not M.is_submodule(C) or w_closure_in(M, C, gv) != C:
            bad.append({"idempotent": describe_submodule(M, N)})
    for A in subs:
        for B in subs:
            if (A & B) == A and cl[A] & ~cl[B]:
                bad.append({"monotone": [describe_submodule(M, A), describe_submodule(M, B)]})
    return CheckResult("closure_operator", not bad, bad)


def check_annihilator_w_ideal(M: FinModule, gv: GVSet | None = None) -> CheckResult:
    """``(0:_R N)`` is a w-ideal for each w-closed submodule ``N``."""
    gv = gv or gv_set(M.ring)
    bad = []
    for N in w_closed_submodules(M, gv):
        A = M.ring_annihilator(N)
        if not is_w_ideal(M.ring, A, gv):
            bad.append({"submodule": describe_submodule(M, N)})
    return CheckResult("annihilator_w_ideal", not bad, bad)


def check_wcg_agree(M: FinModule, gv: GVSet | None = None) -> CheckResult:
    v = is_w_cofinitely_generated(M, gv)
    wit = [] if v.agree else [{"finite_subfamily": v.finite_subfamily, "inverse_system": v.inverse_system}]
    return CheckResult("wcg_definitions_agree", v.agree, wit)


def check_gv_multiplicative(R: FinRing, gv: GVSet | None = None) -> CheckResult:
    gv = gv or gv_set(R)
    members = set(gv.ideals)
    bad = []
    for a in gv.ideals:
        for b in gv.ideals:
            if R.ideal_product(a, b) not in members:
                bad.append([ideal_label(R, a), ideal_label(R, b)])
    return CheckResult("gv_multiplicative", not bad, bad)


def check_star_axioms(R: FinRing, gv: GVSet | None = None) -> CheckResult:
    """w-closure on ideals: extension, order, idempotence, sub-multiplication, unit, principal."""
    gv = gv or gv_set(R)
    M = R.regular
    ideals = M.submodules()
    cl = {I: w_closure_in(M, I, gv) for I in ideals}
    bad = []
    if cl[R.full_mask] != R.full_mask:
        bad.append("unit")
    for A in ideals:
        if A & ~cl[A] or cl[cl[A]] != cl[A]:
            bad.append(["closure", describe_submodule(M, A)])
        for B in ideals:
            if (A & B) == A and cl[A] & ~cl[B]:
                bad.append(["order", describe_submodule(M, A), describe_submodule(M, B)])
            prod_cl = R.ideal_product(cl[A], cl[B])
            if prod_cl & ~cl[R.ideal_product(A, B)]:
                bad.append(["submultiplicative", describe_submodule(M, A), describe_submodule(M, B)])
        for a in range(R.size):
            aA = M.scalar_image(a, A)
            if cl.get(aA) != M.scalar_image(a, cl[A]):
                bad.append(["principal", R.labels[a], describe_submodule(M, A)])
    return CheckResult("star_axioms", not bad, bad)


@dataclass
class Thm25Report:
    side1: bool
    side1_chain_length: int
    wcg: bool
    primes: list
    side2: bool

    @property
    def equivalent(self) -> bool:
        return self.side1 == self.side2

    def to_json(self):
        return {
            "side1_w_artinian": self.side1,
            "longest_descending_chain": self.side1_chain_length,
            "w_cofinitely_generated": self.wcg,
            "primes": self.primes,
            "side2": self.side2,
            "equivalent": self.equivalent,
        }


def _longest_chain(subs: list[int]) -> int:
    """Longest strictly descending chain in a finite family of sets."""
    ordered = sorted(subs, key=popcount)
    best = {}
    for i, N in enumerate(ordered):
        best[N] = 1 + max((best[P] for P in ordered[:i] if (P & N) == P and P != N), default=0)
    return max(best.values(), default=0)


def theorem_2_5_consistency(M: FinModule, gv: GVSet | None = None) -> Thm25Report:
    """Evaluate both sides of the w-Artinian / Cohen-type characterization.

    Side 1 (DCC on w-closed submodules) holds on every finite module; it is
    still evaluated literally through the longest descending chain.
    """
    R = M.ring
    gv = gv or gv_set(R)
    closed = w_closed_submodules(M, gv)
    chain = _longest_chain(closed)
    side1 = chain <= len(closed)
    wcg = is_w_cofinitely_generated(M, gv).value
    annR = M.ring_annihilator()
    primes = []
    side2 = wcg
    for p in prime_ideals(R):
        if not is_w_ideal(R, p, gv) or (annR & ~p):
            continue
        lower = w_closure_in(M, m_bracket_p(M, p), gv)
        upper = M.annihilator(p)
        cands = [upper] + [N for N in closed if N != upper]
        found = None
        for N in cands:
            if (lower & N) != lower or (N & upper) != N or w_closure_in(M, N, gv) != N:
                continue
            Q = M.quotient(N)
            if is_w_cofinitely_generated(Q, gv).value:
                found = N
                break
        primes.append({
            "prime": ideal_label(R, p),
            "N_p": None if found is None else describe_submodule(M, found),
            "N_p_is_annihilator": found == upper,
        })
        side2 = side2 and found is not None
    return Thm25Report(side1, chain, wcg, primes, side2)

"""Certificates over quotient rings R = P/I built on the Groebner engine.

Every certificate is a plain record of membership and ideal-equality facts.
Each fact carries the normal form (or reduced basis) that decided it, so a
certificate can be re-checked against its recorded bases or replayed from
its generator strings on a fresh engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .groebner import (
    IdealGB,
    ideal_equal,
    ideal_power,
    ideal_quotient,
    ideal_sum,
    principal,
    s_polynomial,
)
from .groebner.oracles import _reduce_full
from .poly import Poly, RingSpec

VERDICT_TEMPLATE = "the principal ideal R*{r} is not a w-ideal of R"


class CertificateError(Exception):
    """A certificate could not be issued; ``fact`` names the failed check."""

    def __init__(self, fact: str, detail: str = ""):
        super().__init__(f"{fact}: {detail}" if detail else fact)
        self.fact = fact
        self.detail = detail


@dataclass(frozen=True)
class Fact:
    name: str
    kind: str  # "member", "not_member", "ideal_equal", "proper"
    lhs: str
    rhs: str
    verdict: bool
    evidence: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


def describe(I: IdealGB) -> str:
    return "<" + ", ".join(str(g) for g in (I.generators or I.basis)) + ">"


def member_fact(name: str, f: Poly, I: IdealGB, negate: bool = False) -> Fact:
    nf = I.reduce(f)
    inside = not nf
    return Fact(
        name=name,
        kind="not_member" if negate else "member",
        lhs=str(f),
        rhs=describe(I),
        verdict=(not inside) if negate else inside,
        evidence=str(nf),
    )


def equal_fact(name: str, A: IdealGB, B: IdealGB, lhs: str, rhs: str) -> Fact:
    return Fact(
        name=name,
        kind="ideal_equal",
        lhs=lhs,
        rhs=rhs,
        verdict=ideal_equal(A, B),
        evidence="; ".join(A.basis_strings()),
    )


class QuotRing:
    """R = P / defining, with element equality decided by normal forms."""

    def __init__(self, defining: IdealGB):
        self.defining = defining
        self.ambient: RingSpec = defining.ring

    @classmethod
    def from_strings(cls, ring: RingSpec, gens: Sequence[str]) -> "QuotRing":
        return cls(IdealGB.parse(ring, gens))

    def poly(self, text: str | Poly) -> Poly:
        if isinstance(text, Poly):
            return text.in_ring(self.ambient)
        return Poly.parse(text, self.ambient)

    def is_zero(self, f: Poly) -> bool:
        return self.defining.contains(self.poly(f))

    def equal(self, f, g) -> bool:
        return self.is_zero(self.poly(f) - self.poly(g))

    def ideal(self, gens: Sequence[Poly | str]) -> IdealGB:
        """Preimage in P of the ideal of R generated by ``gens``."""
        polys = [self.poly(g) for g in gens]
        return IdealGB.from_generators(polys + list(self.defining.generators), self.ambient)

    def is_nonzero_ring(self) -> bool:
        return not self.defining.is_unit()

    def in_order(self, order) -> "QuotRing":
        return QuotRing(self.defining.in_order(order))


# --- regular elements and sequences ----------------------------------------

def is_regular_element(R: QuotRing, f: Poly | str) -> bool:
    """True iff multiplication by ``f`` is injective on R."""
    f = R.poly(f)
    if R.is_zero(f):
        raise ValueError("zero element")
    I = R.defining
    return ideal_equal(ideal_quotient(I, ideal_sum(principal(f), I)), I)


@dataclass
class RegSeqCert:
    ring: QuotRing
    sequence: list[Poly]
    checks: list[Fact] = field(default_factory=list)
    properness: Fact | None = None
    failed_at: int | None = None
    reason: str = ""

    @property
    def valid(self) -> bool:
        return self.failed_at is None and self.properness is not None and self.properness.verdict

    def facts(self) -> list[Fact]:
        out = list(self.checks)
        if self.properness is not None:
            out.append(self.properness)
        return out

    def to_json(self) -> dict:
        return {
            "sequence": [str(f) for f in self.sequence],
            "valid": self.valid,
            "failed_at": self.failed_at,
            "reason": self.reason,
            "facts": [f.to_json() for f in self.facts()],
        }


def is_regular_sequence(R: QuotRing, seq: Sequence[Poly | str]) -> RegSeqCert:
    """Check colon stability ``(I_{i-1} : f_i) = I_{i-1}`` and properness.

    ``I_0`` is the defining ideal and ``I_i = I_{i-1} + (f_i)``. Failure is
    reported through ``failed_at`` (1-based) rather than an exception.
    """
    if not seq:
        raise ValueError("sequence must be nonempty")
    polys = [R.poly(f) for f in seq]
    cert = RegSeqCert(R, polys)
    current = R.defining
    for i, f in enumerate(polys, start=1):
        nxt = ideal_sum(current, principal(f))
        colon = ideal_quotient(current, nxt)
        fact = equal_fact(
            f"colon_{i}",
            colon,
            current,
            f"({describe(current)} : {describe(nxt)})",
            describe(current),
        )
        cert.checks.append(fact)
        if not fact.verdict:
            cert.failed_at = i
            cert.reason = f"element {i} ({f}) is a zero divisor modulo the previous ones"
            return cert
        current = nxt
        if current.is_unit():
            cert.properness = Fact("proper", "proper", "1", describe(current), False, "1")
            cert.failed_at = i
            cert.reason = "improper: the ideal becomes the unit ideal"
            return cert
    one = Poly.constant(R.ambient, 1)
    pf = member_fact("proper", one, current, negate=True)
    cert.properness = Fact("proper", "proper", "1", describe(current), pf.verdict, pf.evidence)
    if not cert.properness.verdict:  # pragma: no cover - caught by is_unit above
        cert.failed_at = len(polys)
        cert.reason = "improper: the ideal becomes the unit ideal"
    return cert


# --- GV certificate ---------------------------------------------------------

@dataclass
class GVCert:
    ring: QuotRing
    ideal_gens: list[Poly]
    kind: str  # "depth2" or "unit"
    regseq: RegSeqCert | None
    containment: list[Fact]

    def facts(self) -> list[Fact]:
        return (self.regseq.facts() if self.regseq else []) + list(self.containment)

    @property
    def valid(self) -> bool:
        if self.kind == "unit":
            return all(f.verdict for f in self.containment)
        return self.regseq is not None and self.regseq.valid and all(f.verdict for f in self.containment)

    def to_json(self) -> dict:
        return {
            "ideal": [str(g) for g in self.ideal_gens],
            "kind": self.kind,
            "regular_sequence": self.regseq.to_json() if self.regseq else None,
            "facts": [f.to_json() for f in self.containment],
        }


INCONCLUSIVE = "inconclusive"

_SMALL = (1, -1, 2, -2)


def _candidates(R: QuotRing, gens: list[Poly]) -> list[Poly]:
    out: list[Poly] = []
    seen = set()

    def push(p: Poly):
        if p and not R.is_zero(p) and p not in seen:
            seen.add(p)
            out.append(p)

    for g in gens:
        push(g)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            for a, b in product(_SMALL, repeat=2):
                push(gens[i].scale(a) + gens[j].scale(b))
    return out


def gv_certificate(R: QuotRing, J_gens: Sequence[Poly | str]):
    """Depth-2 certificate that J is a GV-ideal, or ``"inconclusive"``.

    Only the generators and their pairwise combinations with coefficients
    in {±1, ±2} are searched. A failed search never means "not GV".
    """
    gens = [R.poly(g) for g in J_gens]
    if not gens:
        raise ValueError("J needs at least one generator")
    J = R.ideal(gens)
    if J.is_unit():
        one = Poly.constant(R.ambient, 1)
        return GVCert(R, gens, "unit", None, [member_fact("unit_in_J", one, J)])
    cands = _candidates(R, gens)
    for u in cands:
        if not is_regular_element(R, u):
            continue
        for v in cands:
            if v == u:
                continue
            cert = is_regular_sequence(R, [u, v])
            if cert.valid:
                containment = [member_fact(f"seq_{k}_in_J", w, J) for k, w in ((1, u), (2, v))]
                return GVCert(R, gens, "depth2", cert, containment)
    return INCONCLUSIVE


# --- Koszul witness and the w-failure certificate ----------------------------

@dataclass
class KoszulWitness:
    r_elem: Poly
    sequence: list[Poly]
    witness: Poly
    zero_colon: IdealGB  # (I : r), the preimage of (0 :_R r)
    colon_sum: IdealGB  # (I : r) + (f1) + I
    not_in: Fact
    mult_in: Fact

    @property
    def holds(self) -> bool:
        return self.not_in.verdict and self.mult_in.verdict

    def facts(self) -> list[Fact]:
        return [self.not_in, self.mult_in]


def koszul_tor1_witness(
    R: QuotRing,
    r_elem: Poly | str,
    seq: Sequence[Poly | str],
    witness: Poly | str,
    regseq: RegSeqCert | None = None,
) -> KoszulWitness:
    """Check ``w ∉ (I:r)+(f1)+I`` and ``f2*w ∈ (I:r)+(f1)+I``.

    Together these exhibit a nonzero element of
    ``(0 :_{R/(R f1 + (0:_R r))} f2)``.
    """
    r = R.poly(r_elem)
    seq = [R.poly(f) for f in seq]
    if len(seq) != 2:
        raise ValueError("expected a sequence of length 2")
    w = R.poly(witness)
    if regseq is None:
        regseq = is_regular_sequence(R, seq)
    if not regseq.valid or [str(p) for p in regseq.sequence] != [str(p) for p in seq]:
        raise CertificateError("regular_sequence", "sequence is not a certified regular sequence")
    I = R.defining
    T = ideal_sum(principal(r), I)
    zero_colon = ideal_quotient(I, T)
    K = ideal_sum(principal(seq[0]), I)
    colon_sum = ideal_sum(zero_colon, K)
    not_in = member_fact("witness_not_in", w, colon_sum, negate=True)
    mult_in = member_fact("multiple_in", seq[1] * w, colon_sum)
    return KoszulWitness(r, seq, w, zero_colon, colon_sum, not_in, mult_in)


@dataclass
class WFailureCert:
    ring: QuotRing
    gv: GVCert
    principal_elem: Poly
    zero_ideal_colon: IdealGB
    colon_sum: IdealGB
    witness: Poly
    fact_not_in: Fact
    fact_mult_in: Fact
    verdict: str

    def facts(self) -> list[Fact]:
        return self.gv.facts() + [self.fact_not_in, self.fact_mult_in]

    def to_json(self) -> dict:
        return {
            "ring": self.ring.ambient.to_json(),
            "defining_ideal": [str(g) for g in self.ring.defining.generators],
            "defining_basis": self.ring.defining.basis_strings(),
            "principal_element": str(self.principal_elem),
            "gv_ideal": [str(g) for g in self.gv.ideal_gens],
            "regular_sequence": [str(p) for p in self.gv.regseq.sequence] if self.gv.regseq else [],
            "zero_ideal_colon": self.zero_ideal_colon.basis_strings(),
            "colon_sum_basis": self.colon_sum.basis_strings(),
            "witness": str(self.witness),
            "facts": [f.to_json() for f in self.facts()],
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def w_failure_certificate(
    R: QuotRing,
    r_elem: Poly | str,
    J_gens: Sequence[Poly | str],
    witness: Poly | str,
) -> WFailureCert:
    """Certify that the principal ideal ``R*r`` is not a w-ideal.

    Composes the GV certificate for J with the Koszul witness; raises
    :class:`CertificateError` naming the first failed fact otherwise.
    """
    r = R.poly(r_elem)
    if R.is_zero(r):
        raise CertificateError("principal_element", "r is zero in R; the zero ideal is a w-ideal")
    gv = gv_certificate(R, J_gens)
    if gv == INCONCLUSIVE:
        raise CertificateError("gv_certificate", "no length-2 regular sequence found in J")
    if gv.kind == "unit":
        raise CertificateError("gv_certificate", "J is the unit ideal; Ext^1(R/J, -) vanishes")
    kw = koszul_tor1_witness(R, r, gv.regseq.sequence, witness, regseq=gv.regseq)
    for fact in kw.facts():
        if not fact.verdict:
            raise CertificateError(fact.name, f"{fact.kind} {fact.lhs} / {fact.rhs} failed (normal form {fact.evidence})")
    return WFailureCert(
        ring=R,
        gv=gv,
        principal_elem=r,
        zero_ideal_colon=kw.zero_colon,
        colon_sum=kw.colon_sum,
        witness=kw.witness,
        fact_not_in=kw.not_in,
        fact_mult_in=kw.mult_in,
        verdict=VERDICT_TEMPLATE.format(r=r),
    )


# --- re-verification --------------------------------------------------------

def _is_groebner(basis: list[Poly]) -> bool:
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if _reduce_full(s_polynomial(basis[i], basis[j]), basis):
                return False
    return True


def recheck_certificate(data: dict) -> list[str]:
    """Check a certificate JSON against its recorded bases only.

    No Groebner basis is recomputed. Checked: the recorded defining basis
    and colon-sum basis are Groebner bases (all S-polynomials reduce to
    zero); the defining generators reduce to zero modulo the defining basis;
    ``r`` times every recorded colon element lies in I; the colon elements,
    ``f1`` and I lie in the recorded colon sum; and both Koszul facts match
    their recorded normal forms. Returns the problems found (empty if none).
    """
    problems = []
    ring = RingSpec.from_json(data["ring"])

    def P(s):
        return Poly.parse(s, ring)

    basis = [P(s) for s in data["defining_basis"]]
    colon_sum = [P(s) for s in data["colon_sum_basis"]]
    if not _is_groebner(basis):
        problems.append("defining basis is not a Groebner basis")
    if not _is_groebner(colon_sum):
        problems.append("colon-sum basis is not a Groebner basis")
    for g in data["defining_ideal"]:
        if _reduce_full(P(g), basis):
            problems.append(f"generator {g} does not reduce to zero")
    r = P(data["principal_element"])
    colon = [P(s) for s in data["zero_ideal_colon"]]
    for h in colon:
        if _reduce_full(r * h, basis):
            problems.append(f"colon element {h} times r is not in I")
    seq = [P(s) for s in data["regular_sequence"]]
    if len(seq) != 2:
        problems.append("missing regular sequence")
        return problems
    for h in colon + [seq[0]] + basis:
        if _reduce_full(h, colon_sum):
            problems.append(f"{h} is missing from the recorded colon sum")
    w = P(data["witness"])
    facts = {f["name"]: f for f in data["facts"]}
    nf_w = _reduce_full(w, colon_sum)
    nf_m = _reduce_full(seq[1] * w, colon_sum)
    if not nf_w or facts["witness_not_in"]["evidence"] != str(nf_w):
        problems.append("witness_not_in does not re-verify")
    if nf_m or facts["multiple_in"]["evidence"] != "0":
        problems.append("multiple_in does not re-verify")
    if not data.get("verdict"):
        problems.append("missing verdict")
    return problems


def replay_certificate(data: dict, order=None) -> dict[str, bool]:
    """Re-derive every named fact from generator strings on a fresh engine."""
    ring = RingSpec.from_json(data["ring"])
    if order is not None:
        ring = ring.with_order(order)
    R = QuotRing.from_strings(ring, data["defining_ideal"])
    cert = w_failure_certificate(R, data["principal_element"], data["gv_ideal"], data["witness"])
    return {f.name: f.verdict for f in cert.facts()}


# --- relative w-closure chain ------------------------------------------------

@dataclass
class ClosureChain:
    target: IdealGB
    steps: list[IdealGB]
    stabilized_at: int | None
    strict_at_step1: bool

    @property
    def closure(self) -> IdealGB:
        return self.steps[-1] if self.steps else self.target


def relative_w_closure(R: QuotRing, target_gens: Sequence[Poly | str], gv: GVCert, k_max: int = 5) -> ClosureChain:
    """Chain ``(T : J^k)`` for ``k = 1..k_max`` with ``T = target + I``.

    Stops at the first ``k`` where the step equals the previous one
    (``k = 1`` compares against ``T`` itself).
    """
    T = R.ideal(target_gens)
    # T contains I, so (T : A + I) = (T : A) and the GV generators suffice
    J = IdealGB.from_generators(gv.ideal_gens, R.ambient)
    steps: list[IdealGB] = []
    prev = T
    stabilized = None
    for k in range(1, k_max + 1):
        cur = ideal_quotient(T, ideal_power(J, k))
        if not cur.contains_ideal(prev):  # pragma: no cover - colon chains ascend
            raise AssertionError(f"colon chain not ascending at step {k}")
        steps.append(cur)
        if ideal_equal(cur, prev):
            stabilized = k
            break
        prev = cur
    strict = bool(steps) and not ideal_equal(steps[0], T)
    return ClosureChain(T, steps, stabilized, strict)


def saturation_closure(R: QuotRing, T: IdealGB, J: IdealGB, k_max: int = 8) -> IdealGB:
    """``(T : J^k)`` at the first stable ``k``; the closure map of the chain."""
    prev = T
    for k in range(1, k_max + 1):
        cur = ideal_quotient(T, ideal_power(J, k))
        if ideal_equal(cur, prev):
            return cur
        prev = cur
    raise RuntimeError("colon chain did not stabilise within k_max")

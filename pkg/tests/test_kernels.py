import random

import pytest

from gvkit import kernels
from gvkit.finlab import build_ring, direct_sum, quotient_module
from gvkit.groebner import IdealGB
from gvkit.groebner.engine import Encoder, basis_entries
from gvkit.poly import Poly

py = kernels.load_backend("python")
try:
    cy = kernels.load_backend("cython")
except ImportError:  # pragma: no cover - extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def test_active_backend_exposed():
    assert kernels.BACKEND in ("python", "cython")


def _random_int_poly(rng, enc, nvars, terms=6):
    f = {}
    for _ in range(terms):
        m = tuple(rng.randint(0, 2) for _ in range(nvars))
        f[enc.encode(m)] = rng.choice([-3, -1, 1, 2, 5, 12])
    return f


@needs_cy
def test_nf_and_spoly_agree(ex26):
    I = ex26["I"]
    enc = Encoder(I.ring)
    entries = basis_entries(I.basis, enc)
    rng = random.Random(3)
    for _ in range(200):
        f = _random_int_poly(rng, enc, 7)
        assert py.nf_ff(f, entries, enc.decode) == cy.nf_ff(f, entries, enc.decode)
        assert py.primitive(f) == cy.primitive(f)
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            L = tuple(max(a, b) for a, b in zip(entries[i][1], entries[j][1]))
            k = enc.encode(L)
            assert py.spoly_ff(entries[i], entries[j], k) == cy.spoly_ff(entries[i], entries[j], k)


def test_nf_semantics(ex26, P):
    I = ex26["I"]
    enc = Encoder(I.ring)
    entries = basis_entries(I.basis, enc)
    f = Poly.parse("x1*r^2 + 2/3*c*d + a", P)
    fi = enc.to_int_poly(f)
    for mod in filter(None, (py, cy)):
        rem, num, den = mod.nf_ff(fi, entries, enc.decode)
        lhs = enc.to_poly(rem) * num
        assert I.contains(enc.to_poly(fi) * den - lhs)


def _modules():
    for spec in ["Z/12", "Z/2 x Z/4", "Z/4[x]/(x^2)", "Z/8 x Z/8"]:
        R = build_ring(spec)
        yield R.regular
        subs = R.regular.submodules()
        yield quotient_module(R, subs[1])
        if R.size <= 8:
            yield direct_sum(R.regular, R.regular)


@needs_cy
def test_bitmask_kernels_agree():
    rng = random.Random(5)
    for M in _modules():
        tp = py.make_tables(M.add, M.act)
        tc = cy.make_tables(M.add, M.act)
        full = (1 << M.size) - 1
        rfull = (1 << M.ring.size) - 1
        for _ in range(60):
            a = rng.getrandbits(M.size) | 1
            b = rng.getrandbits(M.size) | 1
            s = rng.randrange(M.ring.size)
            I = rng.getrandbits(M.ring.size) & rfull
            assert py.sumset(tp, a, b) == cy.sumset(tc, a, b)
            assert py.span(tp, a) == cy.span(tc, a)
            assert py.scalar_image(tp, s, a) == cy.scalar_image(tc, s, a)
            assert py.cyclic(tp, s % M.size) == cy.cyclic(tc, s % M.size)
            assert py.ann_module(tp, I) == cy.ann_module(tc, I)
            assert py.ann_ring(tp, a) == cy.ann_ring(tc, a)
            assert py.colon(tp, I, a) == cy.colon(tc, I, a)
            assert py.popcount(a & full) == cy.popcount(a & full) == bin(a & full).count("1")


def test_table_size_limit():
    import numpy as np

    big = np.zeros((65, 65), dtype=np.int64)
    for mod in filter(None, (py, cy)):
        with pytest.raises(ValueError):
            mod.make_tables(big, big[:2])


def test_engine_identical_under_both_backends(ex26, monkeypatch):
    from gvkit.groebner import engine

    bases = []
    for mod in filter(None, (py, cy)):
        monkeypatch.setattr(engine, "kernels", mod)
        bases.append(IdealGB.from_generators(ex26["T"].generators, ex26["T"].ring).basis)
    assert all(b == bases[0] for b in bases)


@needs_cy
def test_pair_kernels_agree():
    rng = random.Random(9)
    for _ in range(100):
        exps = [tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(rng.randint(2, 8))]
        e = tuple(rng.randint(0, 2) for _ in range(4))
        assert py.pair_lcms(exps, e) == cy.pair_lcms(exps, e)
        i, j = sorted(rng.sample(range(len(exps)), 2))
        L = tuple(max(a, b) for a, b in zip(exps[i], exps[j]))
        pending = {tuple(sorted(rng.sample(range(len(exps)), 2))) for _ in range(3)}
        assert py.pair_status(exps, i, j, L, pending) == cy.pair_status(exps, i, j, L, pending)


def test_pair_status_semantics():
    exps = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 1)]
    assert py.pair_status(exps, 0, 1, (1, 1, 0), set()) == 1
    # (1,0,0) divides lcm((1,1,0), (1,0,1)) = (1,1,1)
    assert py.pair_status(exps, 2, 3, (1, 1, 1), set()) == 2
    assert py.pair_status(exps, 2, 3, (1, 1, 1), {(0, 2), (1, 2)}) == 0


def test_pure_python_override():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "from gvkit import kernels; print(kernels.BACKEND)"],
        env={**__import__("os").environ, "GVKIT_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"

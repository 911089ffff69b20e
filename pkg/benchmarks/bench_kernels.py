"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload runs with the engine and the finite lab pointed at one backend
at a time; results must agree, and the best-of-N wall time is reported.
"""

from __future__ import annotations

import argparse
import json
import time

from gvkit import example26, kernels
from gvkit.finlab import build_ring, load_catalog
from gvkit.finlab import structures
from gvkit.groebner import IdealGB, engine, ideal_quotient
from gvkit.wcert import QuotRing, w_failure_certificate


def use(backend):
    engine.kernels = backend
    structures.kernels = backend


def wl_groebner():
    ids = example26.ideals("grevlex")
    out = []
    for name in "IJKLT":
        I = ids[name]
        out.append(IdealGB.from_generators(I.generators, I.ring.with_order("lex")).basis_strings())
    out.append(ideal_quotient(ids["I"], ids["T"]).basis_strings())
    return out


def wl_certificate():
    I = example26.ideals("grevlex")["I"]
    return w_failure_certificate(QuotRing(I), "r", ["x1", "x2"], "c").to_json()


def wl_lattices():
    out = []
    for spec in load_catalog():
        R = build_ring(spec)
        M = R.regular
        subs = M.submodules()
        out.append([M.annihilator(I) for I in subs])
    return out


WORKLOADS = {"groebner": wl_groebner, "certificate": wl_certificate, "lattices": wl_lattices}


def bench(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = {"python": kernels.load_backend("python")}
    try:
        backends["cython"] = kernels.load_backend("cython")
    except ImportError:
        print("compiled kernels not built; timing the Python backend only")
    rows = []
    for name, fn in WORKLOADS.items():
        times, results = {}, {}
        for bname, mod in backends.items():
            use(mod)
            times[bname], results[bname] = bench(fn, args.repeat)
        same = len({json.dumps(r, sort_keys=True, default=str) for r in results.values()}) == 1
        row = {"workload": name, "agree": same, **{f"{b}_s": round(t, 4) for b, t in times.items()}}
        if "cython" in times:
            row["speedup"] = round(times["python"] / times["cython"], 2)
        rows.append(row)
    use(kernels)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            extra = f"  cython {r['cython_s']:.4f}s  x{r['speedup']}" if "cython_s" in r else ""
            print(f"{r['workload']:<12} python {r['python_s']:.4f}s{extra}  agree={r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line driver: ``gvkit verify-example26 | ideal ... | finite ... | replay``.

Exit codes: 0 all assertions pass, 1 a mathematical assertion failed,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import example26
from .finlab import RingSizeError, run_catalog
from .finlab.structures import DEFAULT_MAX_SIZE
from .groebner import (
    IdealGB,
    eliminate,
    ideal_equal,
    ideal_intersect,
    ideal_quotient,
    ideal_sum,
    load_ideal,
)
from .poly import ParseError, Poly, RingSpec
from .wcert import CertificateError, recheck_certificate, replay_certificate

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    assertions: list[dict] = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)

    def check(self, name: str, expected, actual):
        self.assertions.append({"name": name, "expected": expected, "actual": actual, "pass": expected == actual})

    @property
    def passed(self) -> bool:
        return all(a["pass"] for a in self.assertions)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "assertions": self.assertions,
            "timings": self.timings,
            "result": self.result,
            "verdict": "pass" if self.passed else "fail",
        }


# --- input helpers ----------------------------------------------------------

def _split_polys(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _ring_from_args(args) -> RingSpec | None:
    if not args.vars:
        return None
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    return RingSpec(names, args.order)


def read_ideal(text: str, ring: RingSpec | None, order: str) -> IdealGB:
    """``ex26:NAME``, ``@file.json`` or an inline comma-separated generator list."""
    if text.startswith("ex26:"):
        name = text[5:]
        ids = example26.ideals(order)
        if name not in ids:
            raise InputError(f"unknown built-in ideal {name!r}; choose from {sorted(ids)}")
        return ids[name]
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"cannot read ideal file {path}: {e}") from e
        return load_ideal(data).in_order(order)
    if ring is None:
        raise InputError("inline ideals need --vars")
    return IdealGB.parse(ring, _split_polys(text))


def _ring_of(ideals: list[IdealGB], ring: RingSpec | None) -> RingSpec:
    if ring is not None:
        return ring
    return ideals[0].ring


def _polys(I: IdealGB) -> list[str]:
    return I.basis_strings()


# --- commands -----------------------------------------------------------------

def cmd_verify_example26(args, report: RunReport):
    t0 = time.perf_counter()
    res = example26.evaluate(args.order, args.mutate_gen)
    report.timings.update(res.timings)
    report.timings["total"] = round(time.perf_counter() - t0, 4)
    for a in res.assertions:
        report.assertions.append(a.to_json())
    report.check("certificate_issued", True, res.certificate is not None)
    report.result = {
        "order": res.order,
        "generators": res.generators,
        "certificate": res.certificate.to_json() if res.certificate else None,
        "certificate_error": res.certificate_error,
    }
    if res.certificate is not None:
        report.result["verdict_statement"] = res.certificate.verdict
        if args.certificate:
            Path(args.certificate).write_text(res.certificate.dumps() + "\n")


def cmd_ideal(args, report: RunReport):
    ring = _ring_from_args(args)
    op = args.op
    t0 = time.perf_counter()
    if op == "gb":
        I = read_ideal(args.ideal, ring, args.order)
        report.result = {"basis": _polys(I), "stats": I.stats.as_dict() if I.stats else {}}
        out = I
    elif op == "member":
        I = read_ideal(args.ideal, ring, args.order)
        f = Poly.parse(args.poly, I.ring)
        nf = I.reduce(f)
        report.result = {"poly": str(f), "member": not nf, "normal_form": str(nf)}
        if args.expect is not None:
            report.check(f"{f} in ideal", args.expect == "true", not nf)
        out = None
    elif op in ("colon", "intersect", "sum"):
        ideals = [read_ideal(t, ring, args.order) for t in args.ideals]
        if op == "colon":
            if len(ideals) != 2:
                raise InputError("colon takes exactly two ideals")
            out = ideal_quotient(ideals[0], ideals[1])
        elif op == "intersect":
            out = ideals[0]
            for J in ideals[1:]:
                out = ideal_intersect(out, J)
        else:
            out = ideal_sum(*ideals)
        report.result = {"basis": _polys(out)}
    elif op == "eliminate":
        I = read_ideal(args.ideal, ring, args.order)
        drop = [v.strip() for v in args.drop.split(",") if v.strip()]
        try:
            out = eliminate(I, drop)
        except KeyError as e:
            raise InputError(str(e)) from e
        report.result = {"variables": list(out.ring.variables), "basis": _polys(out)}
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(op)
    if out is not None and getattr(args, "expect_equal", None):
        E = read_ideal(args.expect_equal, out.ring, args.order)
        report.check("result equals expected ideal", True, ideal_equal(out, E))
    report.timings["total"] = round(time.perf_counter() - t0, 4)


def cmd_finite(args, report: RunReport):
    t0 = time.perf_counter()
    path = args.catalog
    tmp = None
    if args.ring:
        import tempfile

        tmp = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        json.dump({"rings": args.ring}, tmp)
        tmp.close()
        path = tmp.name
    try:
        out = run_catalog(path, args.op, args.max_ring_size)
    finally:
        if tmp is not None:
            Path(tmp.name).unlink(missing_ok=True)
    for r in out["rings"]:
        for c in r["checks"]:
            where = r["ring"] if "module" not in c else f"{r['ring']} | {c['module']}"
            report.assertions.append({
                "name": f"{where} | {c['name']}",
                "expected": True,
                "actual": c["pass"],
                "pass": c["pass"],
                "witnesses": c["witnesses"],
            })
    report.result = out
    report.timings["total"] = round(time.perf_counter() - t0, 4)


def cmd_replay(args, report: RunReport):
    try:
        data = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read certificate {args.file}: {e}") from e
    if "result" in data and isinstance(data["result"], dict) and "certificate" in data["result"]:
        data = data["result"]["certificate"]
    if not data:
        raise InputError("no certificate in file")
    t0 = time.perf_counter()
    problems = recheck_certificate(data)
    report.check("recheck against recorded bases", [], problems)
    recorded = {f["name"]: f["verdict"] for f in data["facts"]}
    try:
        replayed = replay_certificate(data, args.order)
    except CertificateError as e:
        replayed = {"error": str(e)}
    report.check("replayed facts match recorded", recorded, replayed)
    report.result = {"problems": problems, "replayed": replayed}
    report.timings["total"] = round(time.perf_counter() - t0, 4)


# --- output and entry point -------------------------------------------------------

def _print_text(report: RunReport, out):
    for a in report.assertions:
        mark = "PASS" if a["pass"] else "FAIL"
        out.write(f"{mark}  {a['name']}")
        if "statement" in a:
            out.write(f"  [{a['statement']}]")
        out.write("\n")
    res = report.result
    if "basis" in res:
        for g in res["basis"]:
            out.write(g + "\n")
    if "member" in res:
        out.write(f"member: {str(res['member']).lower()}  (normal form {res['normal_form']})\n")
    if res.get("verdict_statement"):
        out.write(f"certificate: {res['verdict_statement']}\n")
    if res.get("certificate_error"):
        out.write(f"certificate: {res['certificate_error']}\n")
    if "rings" in res:
        for r in res["rings"]:
            out.write(f"{r['ring']}: GV = {{{', '.join(r['gv'])}}}  {'pass' if r['pass'] else 'FAIL'}\n")
            for m in r.get("modules", []):
                for p in m["cohen"]["primes"]:
                    out.write(f"    {m['module']}: p = {p['prime']}, N^p = {p['N_p']}\n")
    out.write(f"verdict: {'pass' if report.passed else 'fail'}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gvkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=["lex", "grevlex", "grlex"], default="grevlex")
    common.add_argument("--json", action="store_true", help="print the RunReport as JSON")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-example26", parents=[common], help="recompute the built-in seven-variable example")
    v.add_argument("--mutate-gen", type=int, metavar="I", help="corrupt generator I (1-based)")
    v.add_argument("--certificate", metavar="PATH", help="also write the certificate JSON here")
    v.set_defaults(func=cmd_verify_example26)

    ideal = sub.add_parser("ideal", help="Groebner calculus on ideals")
    isub = ideal.add_subparsers(dest="op", required=True)
    ideal_help = "ideal: 'f1, f2, ...' (needs --vars), @file.json, or ex26:I|J|K|L|T"
    for name in ("gb", "member", "colon", "intersect", "eliminate", "sum"):
        sp = isub.add_parser(name, parents=[common])
        sp.add_argument("--vars", help="comma-separated variable names, in order")
        if name == "member":
            sp.add_argument("poly")
            sp.add_argument("ideal", help=ideal_help)
            sp.add_argument("--expect", choices=["true", "false"])
        elif name in ("gb", "eliminate"):
            sp.add_argument("ideal", help=ideal_help)
        else:
            sp.add_argument("ideals", nargs="+", help=ideal_help)
        if name == "eliminate":
            sp.add_argument("--drop", required=True, help="comma-separated variables to eliminate")
        if name != "member":
            sp.add_argument("--expect-equal", metavar="IDEAL", help="assert the result equals this ideal")
        sp.set_defaults(func=cmd_ideal)

    fin = sub.add_parser("finite", help="finite-ring laboratory")
    fin.add_argument("op", choices=["gv", "wclose", "lemma21", "cohen"])
    fin.add_argument("--catalog", help="catalog JSON (default: built-in catalog)")
    fin.add_argument("--ring", action="append", help="ring spec such as 'Z/12' (repeatable; replaces the catalog)")
    fin.add_argument("--max-ring-size", type=int, default=DEFAULT_MAX_SIZE)
    fin.add_argument("--json", action="store_true")
    fin.set_defaults(func=cmd_finite)

    rp = sub.add_parser("replay", help="re-verify a certificate or verify-example26 JSON report")
    rp.add_argument("file")
    rp.add_argument("--order", choices=["lex", "grevlex", "grlex"], default=None)
    rp.add_argument("--json", action="store_true")
    rp.set_defaults(func=cmd_replay)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(command=["gvkit"] + argv)
    try:
        args.func(args, report)
    except (InputError, ParseError, RingSizeError, FileNotFoundError, ValueError, KeyError) as e:
        sys.stderr.write(f"gvkit: error: {e}\n")
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        _print_text(report, sys.stdout)
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

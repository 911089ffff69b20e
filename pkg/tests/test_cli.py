import json

import pytest

from gvkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_example26_json(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "verify-example26", "--json", "--certificate", str(cert))
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "pass"
    names = [a["name"] for a in rep["assertions"]]
    assert names[:9] == ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A"]
    assert len([n for n in names if n[1:].isdigit()]) == 21
    assert rep["result"]["certificate"]["verdict"].endswith("is not a w-ideal of R")
    assert json.loads(cert.read_text()) == rep["result"]["certificate"]
    # deterministic output apart from timings
    code2, out2, _ = run(capsys, "verify-example26", "--json")
    a, b = json.loads(out), json.loads(out2)
    a.pop("timings"), b.pop("timings")
    a["command"] = b["command"] = None
    assert a == b
    code, out, _ = run(capsys, "replay", str(cert))
    assert code == 0 and "verdict: pass" in out


def test_verify_example26_lex_same_verdicts(capsys):
    _, g, _ = run(capsys, "verify-example26", "--json")
    _, l, _ = run(capsys, "verify-example26", "--json", "--order", "lex")
    verdicts = lambda s: [(a["name"], a["actual"]) for a in json.loads(s)["assertions"]]
    assert verdicts(g) == verdicts(l)


@pytest.mark.parametrize("i", range(1, 8))
def test_mutations_fail(capsys, i):
    code, out, _ = run(capsys, "verify-example26", "--mutate-gen", str(i))
    assert code == 1
    assert "FAIL" in out


def test_mutation_out_of_range(capsys):
    code, _, err = run(capsys, "verify-example26", "--mutate-gen", "9")
    assert code == 2 and "mutate-gen" in err


def test_ideal_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "ideal", "member", "x1*r - a*c", "ex26:I", "--expect", "true")
    assert code == 0 and "member: true" in out
    code, out, _ = run(capsys, "ideal", "member", "c", "ex26:K", "--expect", "true")
    assert code == 1
    code, out, _ = run(capsys, "ideal", "colon", "ex26:I", "ex26:K", "--expect-equal", "ex26:I")
    assert code == 0
    code, out, _ = run(capsys, "ideal", "gb", "--vars", "x1,x2", "x1, x2", "--json")
    assert json.loads(out)["result"]["basis"] == ["x1", "x2"]
    code, out, _ = run(capsys, "ideal", "intersect", "--vars", "x,y", "x", "y", "--json")
    assert json.loads(out)["result"]["basis"] == ["x*y"]
    code, out, _ = run(capsys, "ideal", "sum", "--vars", "x,y", "x^2", "y", "--expect-equal", "x^2, y")
    assert code == 0
    code, out, _ = run(capsys, "ideal", "eliminate", "--vars", "t,x,y", "t*x, (1-t)*y", "--drop", "t", "--json")
    assert json.loads(out)["result"] == {"variables": ["x", "y"], "basis": ["x*y"]}
    f = tmp_path / "i.json"
    f.write_text(json.dumps({"ring": {"vars": ["x", "y"], "order": "lex"}, "generators": ["x^2 - y", "x*y"]}))
    code, out, _ = run(capsys, "ideal", "gb", f"@{f}", "--order", "lex", "--json")
    assert json.loads(out)["result"]["basis"] == ["x^2 - y", "x*y", "y^2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["ideal", "gb", "--vars", "x,y", "x +"],
        ["ideal", "gb", "x, y"],
        ["ideal", "gb", "@/nonexistent.json"],
        ["ideal", "gb", "ex26:Q"],
        ["ideal", "eliminate", "--vars", "x,y", "x", "--drop", "z"],
        ["finite", "gv", "--ring", "Z/8 x Z/16"],
        ["finite", "gv", "--ring", "Z/4", "--max-ring-size", "3"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("gvkit: error")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["ideal", "frobnicate"])
    assert e.value.code == 2


def test_finite_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "finite", "gv", "--ring", "Z/4", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["rings"][0]["gv"] == ["(1)"]
    code, out, _ = run(capsys, "finite", "cohen", "--ring", "Z/12")
    assert code == 0 and "p = (2), N^p =" in out and "p = (3)" in out
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps(["Z/6", "Z/2[x]/(x^2)"]))
    code, out, _ = run(capsys, "finite", "lemma21", "--catalog", str(cat), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["ring_count"] == 2


def test_finite_lemma21_default_catalog(capsys):
    code, out, _ = run(capsys, "finite", "lemma21")
    assert code == 0 and "verdict: pass" in out


def test_replay_detects_tampering(capsys, tmp_path):
    _, out, _ = run(capsys, "verify-example26", "--json")
    cert = json.loads(out)["result"]["certificate"]
    cert["witness"] = "x1"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(cert))
    code, out, _ = run(capsys, "replay", str(p))
    assert code == 1

import json
import subprocess
import sys

import pytest

from buchholz.cli import run
from buchholz.collapse import translate
from buchholz.forest import DoubleForest
from buchholz.term import parse


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compare(capsys):
    assert call(capsys, "compare", "D0(0)", "D1(0)")[:2] == (0, "LT\n")
    assert call(capsys, "compare", "D1(0)", "D1(0)")[1] == "EQ\n"
    code, out, _ = call(capsys, "--json", "compare", "D1(0)", "0")
    assert code == 0 and json.loads(out)["result"] == "GT"


def test_validate(capsys):
    code, out, _ = call(capsys, "validate", "(D0(0),D1(0))")
    assert code == 1 and out.startswith("NOT-OT") and "OT2" in out
    assert call(capsys, "validate", "D0(D0(0))")[:2] == (0, "OT\n")
    code, out, _ = call(capsys, "validate", "D0(D1(0))", "--below", "1")
    assert code == 1 and out.startswith("NOT-OT(1)")
    assert call(capsys, "validate", "D0(D1(0))", "--below", "w")[:2] == (0, "OT(w)\n")
    code, out, _ = call(capsys, "validate", "D0(D0(D1(0)))", "--json")
    assert code == 1 and json.loads(out)["clause"] == "OT3"


def test_parse_and_print(capsys):
    assert call(capsys, "parse", " ( D0(0) , D0(0) ) ")[1] == "(D0(0),D0(0))\n"
    assert call(capsys, "print", "Dw(0)")[1] == "Dw(0)\n"
    code, out, _ = call(capsys, "parse", "D0(D2(0))", "--json")
    assert json.loads(out) == {"term": "D0(D2(0))", "norm": 3, "order": "0", "principal": True}


def test_parse_error_is_domain_error(capsys):
    code, out, err = call(capsys, "parse", "D0(")
    assert code == 1 and out == "" and "position 3" in err


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "compare", "0")[0] == 2
    assert call(capsys, "enumerate", "--max-sub", "-1", "--max-norm", "3")[0] == 2
    assert call(capsys, "verify", "--suite", "nope")[0] == 2
    assert call(capsys, "parse", "0", "--bogus")[0] == 2


def test_enumerate_streams(capsys):
    code, out, _ = call(capsys, "enumerate", "--max-sub", "0", "--max-norm", "3")
    assert code == 0 and out.split() == ["0", "D0(0)", "D0(D0(0))"]
    code, out, _ = call(capsys, "enumerate", "--max-sub", "1", "--max-norm", "2", "--order-zero", "--json")
    assert [json.loads(line) for line in out.splitlines()] == ["0", "D0(0)"]


def test_translate_dot(capsys):
    code, out, _ = call(capsys, "translate", "D0(D1(0))", "--dot")
    assert code == 0
    assert out.count("[label=") == 2
    assert out.count("style=solid") == 1 and out.count("style=dashed") == 1


def test_translate_json_roundtrip(capsys):
    code, out, _ = call(capsys, "--json", "translate", "D0(D2(0))")
    assert DoubleForest.from_json(out) == translate(parse("D0(D2(0))"))
    code, out, _ = call(capsys, "translate", "(D0(0),D0(0))", "--sum")
    assert code == 0 and out.startswith("nodes=3")
    code, _, err = call(capsys, "translate", "(D0(0),D1(0))")
    assert code == 1 and "error" in err


def _write(tmp_path, name, f):
    p = tmp_path / name
    p.write_text(f.dumps())
    return str(p)


def test_cover(tmp_path, capsys):
    small = _write(tmp_path, "a.json", translate(parse("D0(D0(0))")))
    big = _write(tmp_path, "b.json", translate(parse("D0(D1(0))")))
    code, out, _ = call(capsys, "cover", small, big)
    h = json.loads(out)
    assert code == 0 and sorted(h) == ["0.r", "r"]
    assert call(capsys, "cover", big, small)[1] == "NONE\n"
    code, out, _ = call(capsys, "--json", "cover", big, small)
    assert json.loads(out) == {"covering": None}
    assert call(capsys, "cover", str(tmp_path / "missing.json"), small)[0] == 1


def test_validate_forest(tmp_path, capsys):
    good = _write(tmp_path, "g.json", translate(parse("D0(D2(0))")))
    assert call(capsys, "validate-forest", good, "--m2f")[:2] == (0, "pass\n")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"nodes": [{"id": "a"}, {"id": "b", "le2_pred": "a"}]}))
    code, out, _ = call(capsys, "validate-forest", str(bad))
    assert code == 1 and out.startswith("fail(nesting)")
    lab = tmp_path / "lab.json"
    lab.write_text(json.dumps({"nodes": [{"id": "a", "delta": 0}, {"id": "b", "delta": 1, "le1_parent": "a"}]}))
    assert call(capsys, "validate-forest", str(lab))[0] == 0
    code, out, _ = call(capsys, "--json", "validate-forest", str(lab), "--m2f")
    assert code == 1 and json.loads(out)["axiom"] == "descending"
    (tmp_path / "junk.json").write_text("{")
    assert call(capsys, "validate-forest", str(tmp_path / "junk.json"))[0] == 1


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "ltc", "--max-nodes", "4")
    assert code == 0 and out.startswith("PASS ltc")
    code, out, _ = call(capsys, "verify", "--suite", "main", "--max-sub", "1", "--max-norm", "4", "--json")
    report = json.loads(out)
    assert report["passed"] and report["params"] == {"max_sub": 1, "max_norm": 4}


def test_verify_caps_and_violations(capsys, monkeypatch):
    code, _, err = call(capsys, "--max-instances", "3", "verify", "--suite", "main")
    assert code == 1 and "cap" in err
    code, _, err = call(capsys, "verify", "--suite", "lexicographic", "--time-budget", "0")
    assert code == 1
    from buchholz import verify
    monkeypatch.setattr(verify, "leq", lambda a, b: False)
    code, out, _ = call(capsys, "verify", "--suite", "main", "--max-sub", "0", "--max-norm", "3")
    assert code == 3 and out.startswith("FAIL")


def test_verify_output_is_byte_identical(capsys):
    argv = ["--json", "verify", "--suite", "canonical-oracle"]
    assert call(capsys, *argv)[1] == call(capsys, *argv)[1]


def test_experiment(capsys):
    code, out, _ = call(capsys, "experiment", "--c", "1", "--domain", "double-trees", "--length-cap", "5")
    assert code == 0 and out.startswith("c=1 domain=double-trees length=1 exhausted=true")
    code, out, _ = call(capsys, "--json", "experiment", "--c", "1", "--domain", "ot-terms", "--length-cap", "3")
    assert json.loads(out)["sequence"] == ["0"]
    code, _, err = call(capsys, "experiment", "--c", "2", "--domain", "ot-terms", "--length-cap", "5",
                        "--max-steps", "2")
    assert code == 1 and "partial" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "buchholz", "compare", "D0(0)", "D1(0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "LT\n"

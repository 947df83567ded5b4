import json
import subprocess
import sys

import pytest

from bcinv import build_ring
from bcinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_solve_examples(capsys):
    code, out, _ = run(capsys, "solve", "--ring", "zmod:8", "--kind", "left_bc", "--a", "5", "--b", "0",
                       "--c", "2", "--all")
    assert code == 0 and out["exists"] and "4" in out["all"]
    assert out["all"] == ["0", "2", "4", "6"]
    code, out, _ = run(capsys, "solve", "--ring", "zmod:5", "--kind", "moore_penrose", "--a", "2")
    assert code == 0 and out["witness"] == "3"
    code, out, _ = run(capsys, "solve", "--ring", "zmod:6", "--kind", "left_bc", "--a", "2", "--b", "3", "--c", "3")
    assert code == 3 and out["exists"] is False and out["witness"] is None


def test_solve_other_kinds(capsys):
    code, out, _ = run(capsys, "solve", "--ring", "zmod:6", "--kind", "mary", "--a", "2", "--d", "2")
    assert code == 0 and out["witness"] == "2"
    code, out, _ = run(capsys, "solve", "--ring", "zmod:5", "--kind", "delta", "--a", "2", "--delta", "1,3", "--all")
    assert code == 0 and out["all"] == ["3"]
    code, out, _ = run(capsys, "solve", "--ring", "mat:2:zmod:2", "--kind", "two_sided_bc",
                       "--a", "[[1,0],[0,0]]", "--b", "[[1,0],[0,0]]", "--c", "[[1,0],[0,0]]")
    assert code == 0 and out["certificate"]["s"] == "[[1,0],[0,0]]"


@pytest.mark.parametrize("argv", [
    ["solve", "--ring", "zmod:1", "--kind", "left_bc", "--a", "1", "--b", "1", "--c", "1"],
    ["solve", "--ring", "zmod:6", "--kind", "bogus", "--a", "1"],
    ["solve", "--ring", "zmod:6", "--kind", "left_bc", "--a", "1"],
    ["solve", "--ring", "zmod:6", "--kind", "left_bc", "--a", "x", "--b", "1", "--c", "1"],
    ["solve", "--ring", "mat:2:zmod:2", "--kind", "group", "--a", "[[1,0]]"],
    ["solve", "--ring", "zmod:6", "--kind", "delta", "--a", "1", "--delta", "7"],
    ["check", "--claim", "nosuch", "--ring", "zmod:6"],
    ["check", "--claim", "existence-left-bc", "--ring", "zmod:6", "--mode", "sometimes"],
    ["hunt", "--claim", "existence-left-bc", "--rings", "zmod:6"],
    ["hunt", "--claim", "converse-bcirc-equality", "--rings", "zmod:x"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out is None and err.startswith("bcinv: error:")


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--claim", "existence-left-bc", "--ring", "zmod:8", "--mode", "exhaustive")
    assert code == 0 and out["verdict"] == "pass" and out["cases"] == 512
    code, out, _ = run(capsys, "check", "--all-claims", "--ring", "zmod:6", "--mode", "exhaustive")
    assert code == 0 and out["all_passed"]
    assert len(out["reports"]) > 50
    code, out, _ = run(capsys, "check", "--claim", "existence-left-bc", "--ring", "mat:2:zmod:2",
                       "--mode", "sample:1:50", "--workers", "2")
    assert code == 0 and out["cases"] == 50 and out["seed"] == 1


def test_check_exit_4_on_failure(capsys, monkeypatch):
    from bcinv.harness import claims

    c = claims.get_claim("existence-left-bc")
    broken = claims.Claim(c.id, c.arity, lambda ctx, t: (t[0] != 3, {"forced": True}), c.expected, c.anchor, c.names)
    monkeypatch.setitem(claims._REGISTRY, c.id, broken)
    code, out, _ = run(capsys, "check", "--claim", "existence-left-bc", "--ring", "zmod:4")
    assert code == 4 and out["failed"] == 16
    assert out["failures"][0]["tuple"] == {"a": "3", "b": "0", "c": "0"}


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "--claim", "witness-inequality-left-vs-rightann", "--rings", "zmod:8")
    assert code == 0 and out["found"] and out["ring"] == "zmod:8"
    code, out, _ = run(capsys, "hunt", "--claim", "converse-bcirc-equality", "--rings", "zmod:2..12")
    assert code == 3 and out["found"] is False and len(out["rings_scanned"]) == 11


def test_claims_listing(capsys):
    code, out, _ = run(capsys, "claims")
    assert code == 0 and any(c["id"] == "fiveway-left" for c in out)


def test_literals_round_trip(capsys):
    for spec, kind, args in [
        ("mat:2:zmod:3", "moore_penrose", ["--a", "[[1,2],[0,0]]"]),
        ("prod:(zmod:4;mat:2:zmod:2)", "left_bc", ["--a", "(3;[[1,1],[0,1]])", "--b", "(1;[[1,0],[0,0]])",
                                                    "--c", "(1;[[1,0],[0,0]])"]),
    ]:
        R = build_ring(spec)
        code, out, _ = run(capsys, "solve", "--ring", spec, "--kind", kind, *args, "--all")
        literals = out["all"] + [out["witness"]] + list(out["certificate"].values())
        for lit in literals:
            assert str(R.parse(lit)) == lit
        assert [R.parse(x).code for x in out["all"]] == sorted(R.parse(x).code for x in out["all"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bcinv", "solve", "--ring", "zmod:6", "--kind", "left_bc",
                           "--a", "2", "--b", "3", "--c", "3"], capture_output=True, text=True)
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["exists"] is False

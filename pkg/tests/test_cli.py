import json

import pytest

from centerfocus.cli import main

SC1 = json.dumps({"vars": ["x", "y"], "params": ["a02", "b11", "b20"],
                  "P": "-y + a02*y^2", "Q": "x + b20*x^2 + b11*x*y + b11*b20*x^2*y"})
XY = '{"vars": ["x", "y"]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip().splitlines(), out.err


def test_focus(capsys):
    code, lines, _ = run(capsys, "focus", "--family", "riccati3", "--k", "1")
    assert code == 0
    assert lines == ["g1 = 1/2*a02*b02 - 1/4*b02*b11 - 1/4*b11*b20 + 1/4*b21"]
    code, lines, _ = run(capsys, "focus", "--family", "riccati3", "--k", "1", "--modular")
    assert lines == ["g1 = -16001*a02*b02 - 8001*b02*b11 - 8001*b11*b20 + 8001*b21"]


def test_gb_and_orders(capsys):
    code, lines, _ = run(capsys, "gb", "--ring", XY, "--order", "lex", "--ideal", "x^2 + y^2 - 1; x - y")
    assert (code, lines) == (0, ["x - y", "y^2 - 1/2"])


def test_membership(capsys):
    assert run(capsys, "member", "x", "--ring", XY, "--ideal", "x^2")[1] == ["false"]
    assert run(capsys, "radmember", "x", "--ring", XY, "--ideal", "x^2")[1] == ["true"]


def test_ideal_commands(capsys):
    assert run(capsys, "eliminate", "--ring", '{"vars": ["t", "x", "y"]}', "--ideal",
               "x - t^2; y - t^3", "--drop", "t")[1] == ["x^3 - y^2"]
    assert run(capsys, "intersect", "--ring", XY, "--ideal", "x", "--ideal", "y")[1] == ["x*y"]
    assert run(capsys, "equal", "--ring", XY, "--ideal", "x", "--ideal", "2*x")[1] == ["true"]
    assert run(capsys, "dim", "--ideal", "b21; b20; b02")[1] == ["4"]


def test_darboux_commands(capsys):
    assert run(capsys, "darboux", "--system", SC1, "1 + b11*y")[1] == ["K = x^2*b11*b20 + x*b11"]
    code, lines, _ = run(capsys, "darboux", "--family", "riccati3", "x")
    assert code == 1
    assert run(capsys, "intfactor", "--system", SC1, "--factor", "1 + b11*y:-1")[0] == 0
    assert run(capsys, "intfactor", "--system", SC1, "--factor", "1 + b11*y:1")[0] == 1
    H = "1/2*x^2 + 1/2*y^2"
    assert run(capsys, "hamiltonian", "--system", '{"vars":["x","y"],"P":"-y","Q":"x"}', H)[0] == 0


def test_rank_and_modular(capsys):
    assert run(capsys, "jacobian-rank", "--ring", XY, "--poly", "x^2", "--poly", "y",
               "--point", "x=0,y=0")[1] == ["1"]
    assert run(capsys, "reconstruct", "16001")[1] == ["-1/2"]
    assert run(capsys, "reconstruct", "3346")[:2] == (1, ["none"])
    assert run(capsys, "lift", "b02 - 10666*b20")[1] == ["b02 + 5/3*b20"]


def test_json_output(capsys, tmp_path):
    out = tmp_path / "r.json"
    run(capsys, "dim", "--ideal", "a02", "--json", str(out))
    assert json.loads(out.read_text()) == {"dimension": 6}


@pytest.mark.parametrize("argv", [
    ["gb", "--ring", XY, "--ideal", "x^"],
    ["gb", "--ring", "{bad", "--ideal", "x"],
    ["verify-cyclicity", "--samples", "0"],
    ["verify-theorem1", "--prime", "2"],
    ["focus", "--system", '{"vars":["x","y"],"P":"y","Q":"x"}'],
    ["focus"],
    ["jacobian-rank", "--ring", XY, "--poly", "x", "--point", "x=1"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error")


def test_parse_error_offset(capsys):
    _, _, err = run(capsys, "gb", "--ring", XY, "--ideal", "x^")
    assert "offset 2" in err


def test_budget_exit(capsys):
    code, _, err = run(capsys, "gb", "--budget-pairs", "0", "--ideal", "b11*b20 - b21; b02*b11 + b11*b20 - b21")
    assert code == 3 and "budget" in err


def test_verify_cyclicity_cli(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-cyclicity", "--samples", "2", "--no-timing", "--json", str(a)]) == 0
    assert main(["verify-cyclicity", "--samples", "2", "--no-timing", "--json", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["overall"] == "pass"


def test_verify_theorem1_cli(capsys, tmp_path):
    out = tmp_path / "t.json"
    code = main(["verify-theorem1", "--stretch-seconds", "2", "--json", str(out)])
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert code == 1 and data["overall"] == "fail"
    failed = {c["name"] for c in data["checks"] if c["status"] == "fail"}
    assert failed == {"reconstruction-vectors", "lift-modular-i7"}

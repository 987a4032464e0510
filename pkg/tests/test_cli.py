import json

import pytest

from dabimod import jsonio
from dabimod.boxtensor import secondary_product
from dabimod.cli import main
from dabimod.corpus import build


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_basis_command(capsys):
    code, out = run(capsys, "basis", "--summand", "2,1", "--max-exp", "0")
    assert code == 0
    assert out.count("\n") == 8  # 7 monomials + summary line
    assert "Id(A)" in out and "L2" in out


def test_basis_json_roundtrip(capsys):
    code, out = run(capsys, "basis", "--summand", "3", "--max-exp", "1",
                    "--emit", "json")
    assert code == 0
    assert len(json.loads(out)) == 4


def test_deterministic_output(capsys):
    args = ("tensor", "E1", "P", "--bound", "8", "--emit", "json")
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_tensor_is_a_thin_adapter(capsys):
    code, out = run(capsys, "tensor", "E2", "N", "--bound", "8", "--emit", "json")
    assert code == 0
    direct = jsonio.dumps(
        jsonio.concrete_to_json(secondary_product(build("E2"), build("N"), 8))
    )
    assert out == direct


def test_check_pass_and_fail(capsys, tmp_path):
    code, out = run(capsys, "check", "E1", "--bound", "10")
    assert code == 0 and "PASS" in out

    broken = jsonio.bimodule_to_json(build("E1"))
    broken["cells"] = [
        cell for cell in broken["cells"]
        if not (cell["row"] == "X_3" and cell["col"] == "X_2")
    ]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    code, out = run(capsys, "check", str(path), "--bound", "8")
    assert code == 1 and "FAIL" in out


def test_check_rejects_unknown_name(capsys):
    code, _ = run(capsys, "check", "Q", "--bound", "4")
    assert code == 2


def test_iso_command(capsys):
    code, out = run(capsys, "iso", "N", "E2", "--bound", "6")
    assert code == 0
    assert "VERIFIED" in out and "relabeling" in out


def test_symmetry_command(capsys):
    code, out = run(capsys, "symmetry", "P")
    assert code == 0
    assert "transform(P) == N: yes" in out


def test_grade_command(capsys):
    code, out = run(capsys, "grade", "E2", "--bound", "8")
    assert code == 0
    assert "Y_4" in out


def test_latex_output_compiles_structurally(capsys):
    code, out = run(capsys, "tensor", "E1", "P", "--bound", "10", "--emit", "latex")
    assert code == 0
    assert out.startswith("\\documentclass")
    assert out.count("\\begin{array}") == out.count("\\end{array}") == 3
    assert "U_2^{k+1} \\otimes U_1^{k+1}" in out
    assert "L_2U_2^{k} \\otimes (L_2, U_1^{k+1})" in out


def test_reproduce_writes_deterministic_report(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    code, text = run(capsys, "reproduce", "--bound", "6", "--out", str(out1))
    assert code == 0
    assert "overall: PASS" in text
    code, _ = run(capsys, "reproduce", "--bound", "6", "--out", str(out2))
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_reproduce_strict_corrections(capsys):
    code, out = run(capsys, "reproduce", "--bound", "4", "--strict-typos")
    assert code == 1
    assert "strict mode" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2

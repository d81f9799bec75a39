import io
import math
import subprocess
import sys

import pytest

from branch2.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def machine(*argv):
    code, out, err = call("--format", "machine", *argv)
    assert code == 0, err
    pairs = [line.split("=", 1) for line in out.splitlines()]
    return pairs, dict(pairs)


@pytest.fixture
def hopf(tmp_path):
    path = tmp_path / "hopf.txt"
    path.write_text("components: 2\na 1 yes\nb 0 yes\n0 1\n1 0\n")
    return str(path)


def test_slope_decompose():
    assert call("slope", "decompose", "2/3") == (0, "T S T^3 S\n", "")
    code, out, _ = call("slope", "decompose", "-1/3")
    assert (code, out.strip()) == (0, "S T^3 S")
    _, kv = machine("slope", "decompose", "2/3")
    assert kv["matrix"].split(",")[0::2] == ["2", "3"]


def test_tangle_commands():
    assert call("tangle", "det", "7/3")[1].strip() == "7"
    code, out, _ = call("tangle", "bridge", "2/3")
    assert code == 0 and "2 component(s)" in out
    pairs, kv = machine("tangle", "bridge", "2/3")
    assert kv["components"] == "2"
    assert len([k for k, _ in pairs if k == "pd"]) == 4


def test_surgery_commands(hopf):
    assert call("surgery", "h1", hopf)[1].strip() == "1"
    code, out, _ = call("surgery", "twist", hopf, "a", "-1")
    assert code == 0 and "a inf yes" in out
    _, kv = machine("surgery", "blowdown", hopf, "a")
    assert kv["framing.b"] == "-1"
    assert call("surgery", "blowdown", hopf, "b")[0] == 1
    assert call("surgery", "h1", "/nonexistent/file")[0] == 1


def test_surgery_from_stdin(hopf, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(open(hopf).read()))
    assert call("surgery", "h1", "-")[1].strip() == "1"


def test_seifert_commands():
    _, kv = machine("seifert", "quotient", "3", "5", "1")
    assert kv["invariants"] == "{0,(Oo,0),(3,4),(5,-2),(1,1)}" and kv["h1_order"] == "13"
    _, kv = machine("seifert", "h1", "{1,(Oo,0),(-2,1),(-3,1),(-11,2)}")
    assert kv["h1_order"] == "1" and kv["euler_number"] == "1/66"
    assert call("seifert", "quotient", "2", "5", "1")[0] == 1
    assert call("seifert", "h1", "{garbage}")[0] == 1


def test_involution_extend():
    _, kv = machine("involution", "extend", "S1E", "1", "--quotient-knot", "3_1")
    assert kv["quotient"] == "S3_3_1(1/2)" and kv["branch_components"] == "1"
    _, kv = machine("involution", "extend", "S0S0", "2/3")
    assert kv["extends"] == "false"
    assert call("involution", "extend", "S1E", "1")[0] == 1
    assert call("involution", "extend", "XX", "1")[0] == 2


def test_census_report_10_98():
    code, out, _ = call("census", "report", "10_98", "1")
    assert code == 0
    assert "no S3 quotient" in out
    _, kv = machine("census", "report", "10_98", "1")
    assert kv["quotients"] == "1" and kv["quotient.1"] == "S3_3_1(1/2)"
    assert kv["three_sphere"] == "false"


def test_census_other_reports():
    _, kv = machine("census", "report", "5_2", "1/2")
    assert kv["symmetry_group"] == "D_2x4" and kv["exceptional"] == "true"
    _, kv = machine("census", "report", "9_32", "1/5")
    assert kv["quotients"] == "0"
    assert call("census", "report", "nope", "1")[0] == 1
    _, kv = machine("census", "lookup", "8_5")
    assert kv["classes"] == "S1S0,S1E" and kv["s1e_quotient"] == "knotted"
    _, kv = machine("census", "rows")
    assert kv["row.none"] == "29,26"


def test_census_override(tmp_path, monkeypatch):
    path = tmp_path / "c.txt"
    path.write_text('row r stated=- "r"\nknot k classes=S1S0 s1e_quotient=- higher=- row=r\n')
    _, kv = machine("--census", str(path), "census", "report", "k", "1")
    assert kv["quotients"] == "1"
    _, kv = machine("census", "lookup", "k", "--census", str(path))
    assert kv["classes"] == "S1S0"
    monkeypatch.setenv("BRANCH2_CENSUS", str(path))
    assert call("census", "lookup", "10_98")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("nonsense\n")
    code, _, err = call("--census", str(bad), "census", "rows")
    assert code == 1 and "line 1" in err


def test_hyperbolic_length():
    code, out, _ = call("hyperbolic", "length", "2", "3")
    assert code == 0 and out.startswith("0.48332194670")
    _, kv = machine("hyperbolic", "length", "2", "3")
    assert abs(float(kv["length"]) - 2 * math.pi / 13) < 1e-11
    assert call("hyperbolic", "length", "2", "4")[0] == 1


def test_hyperbolic_family():
    _, kv = machine("hyperbolic", "family", "inf")
    assert kv["kind_A"] == "parabolic" and kv["residual_A"] == "-"
    _, kv = machine("hyperbolic", "family", "10", "--zeta", "0.5+2i")
    assert kv["kind_A"] == "elliptic" and float(kv["residual_B"]) < 1e-9
    assert call("hyperbolic", "family", "0")[0] == 1
    assert call("hyperbolic", "family", "abc")[0] == 2
    assert call("hyperbolic", "family", "5", "--zeta", "-1i")[0] == 1


def test_text_and_machine_agree():
    _, out, _ = call("tangle", "det", "12/5")
    _, kv = machine("tangle", "det", "12/5")
    assert out.strip() == kv["determinant"]
    _, out, _ = call("slope", "decompose", "7/3")
    _, kv = machine("slope", "decompose", "7/3")
    assert out.strip() == kv["word"]


def test_sweep_writes_files(tmp_path):
    code, out, err = call("hyperbolic", "sweep", "--max-norm", "50", "--out-dir", str(tmp_path))
    assert code == 0, err
    for name in ("length_law.csv", "family.csv", "length_law.png", "convergence.png"):
        assert (tmp_path / name).stat().st_size > 0
    header = (tmp_path / "length_law.csv").read_text().splitlines()[0]
    assert header == "p,q,relation_residual,length,expected"
    _, kv = machine("hyperbolic", "sweep", "--max-norm", "20")
    assert kv["residual_decreasing"] == "true"


@pytest.mark.parametrize(
    "argv",
    [[], ["nope"], ["slope"], ["slope", "decompose"], ["slope", "decompose", "1/0/3"],
     ["slope", "decompose", "1", "2"], ["--format", "xml", "slope", "decompose", "1"],
     ["hyperbolic", "length", "x", "1"]],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_precondition_errors():
    assert call("slope", "decompose", str(10**7))[0] == 1
    assert call("tangle", "det", "5000")[0] == 1
    assert call("hyperbolic", "sweep", "--max-norm", "0")[0] == 1


def test_help_exits_zero():
    assert call("--help")[0] == 0


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "branch2.cli", "slope", "decompose", "2/3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "T S T^3 S"
    proc = subprocess.run([sys.executable, "-m", "branch2.cli", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2

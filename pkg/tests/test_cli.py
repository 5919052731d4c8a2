import csv
import io
import json
import subprocess
import sys

import pytest

from coxfake.cli import TABLE_HEADER, main, run


def test_info_text():
    code, out = run(["info", "E8"])
    assert code == 0
    assert "h          30" in out and "|Phi|      240" in out
    assert "stabilizer E7" in out


def test_info_json():
    code, out = run(["info", "A1", "--format", "json"])
    obj = json.loads(out)
    assert code == 0 and obj["h"] == 2 and obj["roots"] == 2


def test_info_i2_even():
    _, out = run(["info", "I2(14)", "--format", "json"])
    obj = json.loads(out)
    assert obj["h"] == 14
    assert [o["size"] for o in obj["orbits"]] == [14, 14]


def test_info_csv():
    _, out = run(["info", "B3", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["type", "rank", "h", "degrees", "roots", "orbits"]
    assert rows[1][:3] == ["B3", "3", "6"]


def test_fakedeg_text():
    code, out = run(["fakedeg", "H3"])
    assert code == 0
    assert "f/[10]_q = 1 + q^2 + q^4" in out
    _, out = run(["fakedeg", "B3", "--orbit", "short"])
    assert "f/[6]_q = 1\n" in out


def test_fakedeg_json():
    _, out = run(["fakedeg", "A2", "--format", "json"])
    obj = json.loads(out)
    assert obj["f"] == {"coeffs": [1, 2, 2, 1]}
    assert obj["quotient"] == {"coeffs": [1, 1]}


def test_fakedeg_latex_and_csv():
    _, out = run(["fakedeg", "F4", "--orbit", "long", "--format", "latex"])
    assert "1 + q^{4}" in out
    _, out = run(["fakedeg", "F4", "--format", "csv"])
    assert out.splitlines()[0] == "type,orbit,f,quotient,gcd"


@pytest.mark.parametrize("argv", [
    ["fakedeg", "E8", "--orbit", "short"],
    ["info", "Q7"],
    ["info", "E9"],
    ["dump", "I2(2)"],
    ["verify"],
])
def test_usage_errors(argv, capsys):
    code, out = run(argv)
    assert code == 2 and out == ""
    assert capsys.readouterr().err.startswith("coxfake: ")


def test_argparse_errors_exit_2():
    code, _ = run(["fakedeg", "A2", "--format", "yaml"])
    assert code == 2
    code, _ = run(["nope"])
    assert code == 2


def test_table_small_bounds():
    code, out = run(["table", "--max-rank", "4", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == ",".join(TABLE_HEADER)
    types = [r["type"] for r in rows]
    for t in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "I2(5)", "I2(30)"):
        assert t in types
    assert "D5" not in types and "E6" not in types and "A5" not in types
    h3 = next(r for r in rows if r["type"] == "H3")
    assert h3["quotient"] == "1 + q^2 + q^4" and h3["stabilizer"] == "A1 x A1" and h3["gcd"] == "1"


def test_table_exceptional_rows():
    _, out = run(["table", "--format", "json", "--max-m", "5"])
    rows = {(r["type"], r["orbit"]): r for r in json.loads(out)}
    assert rows[("E7", "Phi")]["quotient"] == {"coeffs": [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1]}
    assert rows[("E7", "Phi")]["stabilizer"] == "D6"
    assert rows[("E8", "Phi")]["stabilizer"] == "E7"
    assert rows[("E6", "Phi")]["recipe"] == "[2]_{q^4}*[3]_{q^3}"
    assert rows[("F4", "long roots")]["gcd"] == {"coeffs": [1, 0, 0, 0, 0, 0, 1]}
    assert rows[("F4", "short roots")]["gcd"] is None
    assert rows[("H4", "Phi")]["stabilizer"] == "H3"


def test_table_latex():
    _, out = run(["table", "--max-rank", "3", "--max-m", "6", "--format", "latex"])
    assert out.startswith("\\begin{tabular}") and out.rstrip().endswith("\\end{tabular}")
    assert "$H_{3}$ & $10$ & $\\Phi$ & $A_{1} \\times A_{1}$ & $1 + q^{2} + q^{4}$ & $[3]_{q^2}$" in out
    assert "$I_2(6)$" in out


def test_verify_single():
    code, out = run(["verify", "H4"])
    obj = json.loads(out)
    assert code == 0 and obj["failures"] == 0
    (rep,) = obj["reports"]
    status = {c["id"]: c["status"] for c in rep["claims"]}
    assert status["thm1ii"] == "n/a" and status["thm1i.all"] == "pass"


def test_verify_text_and_csv():
    code, out = run(["verify", "C3", "--format", "text"])
    assert code == 0 and out.startswith("C3: ") and out.endswith("0 failing claims\n")
    _, out = run(["verify", "A2", "--format", "csv"])
    assert out.splitlines()[0] == "type,claim,status,ref"


def test_verify_failure_exit_code(monkeypatch):
    import coxfake.fakedeg as fd

    monkeypatch.setattr(fd, "verify_thm_i", lambda rs, s: fd.Outcome(False, {}))
    code, out = run(["verify", "A2"])
    assert code == 1 and json.loads(out)["failures"] == 1


def test_verify_all_small_bounds_deterministic():
    argv = ["verify", "--all", "--max-rank", "4", "--max-m", "8"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 0
    labels = [r["type"] for r in json.loads(a[1])["reports"]]
    assert labels[0] == "A1" and labels[-1] == "I2(8)"


def test_dump():
    _, out = run(["dump", "A2"])
    obj = json.loads(out)
    assert obj["type"] == "A2" and len(obj["roots"]) == 6
    assert sorted(obj["orbits"][0]["distances"]) == [0, 1, 1, 2, 2, 3]


def test_main_writes_to_stdout(capsys):
    assert main(["info", "A3"]) == 0
    assert "type       A3" in capsys.readouterr().out


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "coxfake", "fakedeg", "A1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "f        = 1 + q" in proc.stdout

import json
import subprocess
import sys

import pytest

from nihospec.cli import main
from nihospec.report import Report, emit


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def test_walsh_csv_example(capsysbinary):
    code, out, _ = run(capsysbinary, "walsh", "--p", "3", "--m", "1", "--d", "5", "--format", "csv")
    assert code == 0
    assert out == "value,multiplicity\n-3,16\n0,24\n3,24\n6,8\n"


def test_verify_example(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--p", "2", "--m", "3", "--s", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True
    assert all(c["match"] for c in rep["checks"])
    assert rep["field"]["modulus"] == [1, 1, 0, 0, 0, 0, 1]


def test_search_reports_measured_sets(capsysbinary):
    code, out, _ = run(capsysbinary, "search", "--p", "3", "--m", "1")
    assert code == 0
    assert json.loads(out)["locally_apn"] == [2, 3]
    code, out, _ = run(capsysbinary, "search", "--p", "2", "--m", "2")
    rep = json.loads(out)
    assert rep["locally_apn"] == [2, 4]
    assert code == 1 and rep["mismatches"] == [3]


def test_verify_by_d_and_non_niho(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--p", "2", "--m", "2", "--d", "7")
    assert code == 0 and json.loads(out)["s"] == 2
    code, _, err = run(capsysbinary, "verify", "--p", "2", "--m", "2", "--d", "11")
    assert code == 2 and "not a Niho exponent" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["diff", "--p", "2", "--m", "2"],  # no exponent
        ["diff", "--p", "2", "--m", "2", "--d", "7", "--s", "2"],  # both
        ["bogus", "--p", "2", "--m", "2"],
        ["diff", "--p", "4", "--m", "1", "--d", "3"],  # not prime
        ["diff", "--p", "2", "--m", "2", "--d", "99"],  # exponent range
        ["fbct", "--p", "3", "--m", "1", "--d", "5"],  # odd characteristic
        ["curve", "--p", "2", "--m", "2", "--n1", "7", "--n2", "7"],  # hypothesis
        ["curve", "--p", "2", "--m", "2", "--n1", "5", "--n2", "5", "--alpha", "0"],
    ],
)
def test_usage_errors(capsysbinary, argv):
    code, out, err = run(capsysbinary, *argv)
    assert code == 2 and out == "" and err


def test_budget_exit(capsysbinary):
    code, out, err = run(capsysbinary, "walsh", "--p", "2", "--m", "4", "--d", "31", "--budget", "1000")
    assert code == 3 and out == "" and "budget" in err
    code, _, _ = run(capsysbinary, "diff", "--p", "2", "--m", "11", "--d", "3")
    assert code == 3


def test_budget_env(capsysbinary, monkeypatch):
    monkeypatch.setenv("NIHOSPEC_BUDGET", "100")
    code, _, _ = run(capsysbinary, "codes", "--p", "2", "--m", "2", "--d", "7")
    assert code == 3


def test_output_file(tmp_path, capsysbinary):
    target = tmp_path / "r.csv"
    code, out, _ = run(capsysbinary, "fbct", "--p", "2", "--m", "2", "--s", "2", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_bytes() == b"value,count\n0,180\n4,30\n16,46\n"


def test_other_commands(capsysbinary):
    code, out, _ = run(capsysbinary, "cij", "--p", "3", "--m", "2")
    assert code == 0 and json.loads(out)["total"] == 79
    code, out, _ = run(capsysbinary, "curve", "--p", "2", "--m", "2", "--n1", "5", "--n2", "5")
    assert code == 0 and json.loads(out)["measured"] == 60
    code, out, _ = run(capsysbinary, "vsys", "--p", "2", "--m", "3", "--s", "2", "--g2", "1")
    rep = json.loads(out)
    assert code == 0 and rep["paired_mismatches"] == 0 and rep["literal_mismatches"] == 2464
    code, out, _ = run(capsysbinary, "predict", "--p", "2", "--m", "3", "--s", "3", "--format", "csv")
    assert code == 0 and "uniformity,10\n" in out and "locally_apn,false\n" in out
    code, out, _ = run(capsysbinary, "codes", "--p", "3", "--m", "1", "--d", "5", "--format", "csv")
    assert out == "w,count\n0,1\n2,8\n4,24\n6,32\n8,16\n"
    code, out, _ = run(capsysbinary, "sozd", "--p", "3", "--m", "1", "--d", "5", "--naive")
    assert json.loads(out)["distribution"] == {"1": 48, "3": 16, "9": 17}
    code, out, _ = run(capsysbinary, "field", "--p", "3", "--m", "1", "--format", "csv")
    assert out.splitlines()[0] == "element,log,trace" and len(out.splitlines()) == 10
    code, out, _ = run(capsysbinary, "diff", "--p", "2", "--m", "2", "--s", "2")
    assert json.loads(out)["spectrum"] == {"0": 9, "2": 6, "4": 1}


def test_non_rational_walsh_json(capsysbinary):
    code, out, _ = run(capsysbinary, "walsh", "--p", "3", "--m", "1", "--d", "2")
    rep = json.loads(out)
    assert code == 0 and all(m["match"] for m in rep["moments"])
    assert any(isinstance(e["value"], dict) and e["value"]["rational"] is False for e in rep["distribution"])


def test_empty_distribution_csv():
    assert emit(Report({}, ("value", "multiplicity"), []), "csv") == b"value,multiplicity\n"


def test_json_sorted_and_float_free(capsysbinary):
    _, out, _ = run(capsysbinary, "walsh", "--p", "2", "--m", "2", "--d", "7")
    assert "." not in out.replace('"', "")
    data = json.loads(out)
    assert list(data) == sorted(data)


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "nihospec.cli", "diff", "--p", "2", "--m", "2", "--d", "7", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout == "value,multiplicity\n0,9\n2,6\n4,1\n"

import csv
import io
import json
import subprocess
import sys

import pytest

from k4links.cli import build_series, constants_report, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "K", "--order", "15")
    assert code == 0
    assert out.strip().endswith("26 z^15")
    assert out.startswith("1 + 2 z^3 + 2 z^5 + 3 z^6")


def test_series_order_zero(capsys):
    assert run(capsys, "series", "K", "--order", "0")[1].strip() == "1"


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "M2plus", "--order", "16", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["n", "coefficient"]
    assert rows[-1] == ["16", "150776064"]
    assert [int(r[1]) for r in rows[1:]] == build_series("M2plus", 16)


def test_series_json_roundtrip(capsys):
    _, out, _ = run(capsys, "series", "Lbar", "--order", "12", "--format", "json")
    data = json.loads(out)
    assert data["family"] == "Lbar" and data["order"] == 12
    assert [int(c) for c in data["coefficients"]][-1] == 280


def test_constants_Lbar(capsys):
    code, out, _ = run(capsys, "constants", "Lbar", "--precision", "30", "--digits", "8")
    assert code == 0
    assert "rho: 0.44074" in out


def test_constants_knots(capsys):
    _, out, _ = run(capsys, "constants", "Knots", "--format", "json")
    assert json.loads(out)["beta"].startswith("2.56509")


def test_constants_unrooted(capsys):
    _, out, _ = run(capsys, "constants", "unrootedM2", "--precision", "30", "--format", "json")
    data = json.loads(out)
    assert data["rho"].startswith("0.23626")
    assert data["prefactor"] == "1/(2n)"


def test_constants_report_rejects_excess_digits():
    with pytest.raises(ValueError):
        constants_report("M", 25, precision=30)


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "printed-series")
    assert code == 0
    assert out.strip().splitlines()[-1] == "pass"
    code, out, _ = run(capsys, "verify", "oracle", "--max-vertices", "3")
    assert code == 0 and "[FAIL]" not in out
    code, _, _ = run(capsys, "verify", "partitions", "--order", "500")
    assert code == 0


def test_verify_reports_failure(capsys, monkeypatch):
    from k4links import reference

    broken = dict(reference.REFERENCE_SERIES)
    broken["K"] = broken["K"][:-1] + [27]
    monkeypatch.setattr("k4links.verify.REFERENCE_SERIES", broken)
    code, out, _ = run(capsys, "verify", "printed-series")
    assert code == 1
    assert "[FAIL] printed-series: K" in out and out.strip().endswith("fail")


@pytest.mark.parametrize("argv", [
    ["series", "nope"],
    ["series", "K", "--order", "-1"],
    ["constants", "M", "--digits", "55", "--precision", "60"],
    ["verify", "oracle", "--max-vertices", "9"],
    [],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "k4links", "series", "L", "--order", "13"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip().endswith("30 z^13")

import csv
import io
import json

import pytest

from yamabe_bounds.cli import main
from yamabe_bounds.report import canonical_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_printed_example(capsys):
    code, out, _ = run(capsys, "bound", "--v", "3", "--w", "2", "--gamma", "0.63", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["ratio"] == pytest.approx(0.571, abs=5e-4)
    assert d["value"] > 45.1
    assert d["formula"] == "general"
    assert d["gamma_source"] == "command line"


def test_bound_from_registry(capsys):
    code, out, _ = run(capsys, "bound", "--v", "2", "--w", "2", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["value"] >= 38.9
    assert "Petean" in d["gamma_source"]


def test_bound_missing_constant(capsys):
    code, out, err = run(capsys, "bound", "--v", "3", "--w", "3", "--registry-only")
    assert code == 3
    assert out == ""
    assert "gamma" in err


def test_bound_domain_error(capsys):
    code, _, err = run(capsys, "bound", "--v", "2", "--w", "2", "--gamma", "1.5")
    assert code == 2
    assert "gamma" in err


def test_bound_refined_not_applicable(capsys):
    code, _, err = run(capsys, "bound", "--v", "2", "--w", "3", "--formula", "general-refined")
    assert code == 2
    assert "v > w" in err


def test_bound_closed_forms(capsys):
    code, out, _ = run(capsys, "bound", "--v", "2", "--w", "2", "--formula", "corollary44", "--format", "json")
    assert code == 0
    assert json.loads(out)["tolerance"] == 0.0
    code, out, _ = run(capsys, "bound", "--v", "2", "--w", "3", "--formula", "corollary42")
    assert code == 0
    assert "corollary42" in out


def test_bound_product_formula_fallback(capsys):
    code, out, _ = run(capsys, "bound", "--v", "6", "--w", "2", "--format", "json")
    assert code == 0
    assert "product formula" in json.loads(out)["gamma_source"]


def test_usage_error(capsys):
    code, _, err = run(capsys, "bound", "--v", "x", "--w", "2")
    assert code == 2
    code, _, _ = run(capsys)
    assert code == 2


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table", "table1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    assert [float(r["numeric"]) for r in rows] == [38.9, 56.6, 109.2, 102.6, 45.1, 49.9]
    assert [float(r["analytic"]) for r in rows] == [38.9, 51.2, 106.9, 100.6, 29.7, 36.4]
    assert all(r["gamma_source"] for r in rows)


def test_table1_text(capsys):
    code, out, _ = run(capsys, "table", "table1")
    assert code == 0
    assert "(4,2)" in out and "49.9" in out and "36.4" in out


def test_tn_table(capsys):
    code, out, _ = run(capsys, "table", "tn")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[1:] == [str(n) for n in range(3, 12)]
    assert "182.1" in lines[2]
    code, out, _ = run(capsys, "table", "tn", "--format", "json")
    data = json.loads(out)
    assert [r["n"] for r in data] == list(range(3, 12))
    assert data[1]["t_n"] is None


def test_sigma_table(capsys):
    code, out, _ = run(capsys, "table", "sigma", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [d["dimension"] for d in data] == [5, 6, 9, 10]
    assert all(d["meets_claim"] for d in data)


@pytest.mark.parametrize("argv", [
    ("table", "table1", "--format", "json"),
    ("table", "sigma", "--format", "json"),
    ("table", "tn", "--format", "json"),
    ("bound", "--v", "4", "--w", "2", "--format", "json"),
    ("squeeze", "--v", "3", "--c", "0.5", "--r", "2", "--format", "json"),
])
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert canonical_json(json.loads(out)) == out


def test_table_missing_constant(capsys, tmp_path):
    code, _, err = run(capsys, "table", "tn", "--registry-only")
    assert code == 3


def test_registry_file_override(capsys, tmp_path):
    path = tmp_path / "reg.json"
    path.write_text(json.dumps({"3,3": {"gamma": 0.6, "source": "test file"}}))
    code, out, _ = run(capsys, "bound", "--v", "3", "--w", "3", "--registry", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["gamma_source"] == "test file"


def test_registry_file_missing(capsys, tmp_path):
    code, _, err = run(capsys, "table", "table1", "--registry", str(tmp_path / "none.json"))
    assert code == 2


def test_out_file_atomic(capsys, tmp_path):
    target = tmp_path / "t1.csv"
    code, out, _ = run(capsys, "table", "table1", "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("v,w,n,k")
    assert [p.name for p in tmp_path.iterdir()] == ["t1.csv"]


def test_squeeze_origin(capsys):
    code, out, _ = run(capsys, "squeeze", "--v", "2", "--c", "1", "--r", "0", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["f"] == 0.0 and d["f_prime"] == 1.0


def test_squeeze_contracts(capsys):
    code, out, _ = run(capsys, "squeeze", "--v", "2", "--c", "1", "--r", "2", "--format", "json")
    d = json.loads(out)
    assert d["f"] < 2 and d["f_prime"] < 1


def test_squeeze_flat_limit(capsys):
    code, out, _ = run(capsys, "squeeze", "--v", "2", "--c", "0.000001", "--r", "1", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert abs(float(row["f"]) - 1.0) <= 1e-6


@pytest.mark.parametrize("argv", [
    ("squeeze", "--v", "1", "--c", "1", "--r", "1"),
    ("squeeze", "--v", "2", "--c", "0", "--r", "1"),
    ("squeeze", "--v", "2", "--c", "1", "--r", "-1"),
])
def test_squeeze_domain(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


@pytest.mark.parametrize("status", [1, 2])
def test_numerical_failure_exit(capsys, monkeypatch, status):
    # the round-off floor makes real non-convergence hard to provoke, so
    # stub the kernel to report a quadrature (1) or Newton (2) failure
    from yamabe_bounds import kernels
    monkeypatch.setattr(kernels, "invert_ball_volume", lambda *a: (1.0, 0.0, 100, status))
    code, out, err = run(capsys, "squeeze", "--v", "4", "--c", "1", "--r", "10")
    assert code == 4
    assert out == ""
    assert "numerical failure" in err

from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import mpmath
import pytest

from icosa.cli import main
from icosa.cli.documents import (
    CUBIC_MONOMIALS,
    DocumentError,
    cubic_from_document,
    cubic_to_document,
    decode_scalar,
    encode_scalar,
    sextic_from_document,
    sextic_to_document,
)
from icosa.cli.main import EXIT_BUDGET, EXIT_MALFORMED, EXIT_OK, EXIT_VERIFY
from icosa.exact_core.scalars import I, SQRT5, QISqrt5, QSqrt5
from icosa.icosa_solver import generate_cubic_through


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


# -- scalar and document encoding --------------------------------------------------------------


@pytest.mark.parametrize(
    "x",
    [Fraction(-3, 7), 5, QSqrt5(Fraction(1, 2), Fraction(-3, 4)), QISqrt5(QSqrt5(1, 2), QSqrt5(Fraction(-1, 3), 0)), I, SQRT5],
)
def test_exact_scalar_round_trip(x):
    assert decode_scalar(json.loads(json.dumps(encode_scalar(x)))) == x


def test_numeric_scalar_round_trip_keeps_precision():
    ctx = mpmath.MPContext()
    ctx.prec = 200
    z = ctx.mpc(ctx.pi, -ctx.e) / 7
    back = decode_scalar(encode_scalar(z), ctx)
    assert abs(back - z) < ctx.mpf(2) ** -190


@pytest.mark.parametrize("bad", [{"q": "1/0"}, {"q5": ["1"]}, {"z": "1"}, ["1"], 3.5, {"q": 1.5}, ["x", "0"]])
def test_bad_scalars(bad):
    with pytest.raises(DocumentError):
        decode_scalar(bad)


def test_cubic_document_round_trip():
    f = generate_cubic_through(None, seed=2).f
    doc = json.loads(json.dumps(cubic_to_document(f)))
    assert cubic_from_document(doc).poly == f.poly
    assert len(doc["coefficients"]) == len(CUBIC_MONOMIALS) == 10


def test_cubic_document_rejects_non_harmonic():
    doc = {"coefficients": [{"q": "1"}] + [{"q": "0"}] * 9}  # x1^3
    with pytest.raises(DocumentError):
        cubic_from_document(doc)


def test_sextic_document_round_trip():
    coeffs = [Fraction(1), 0, Fraction(-2, 3), 0, 0, 5, QSqrt5(0, 1)]
    back = sextic_from_document(json.loads(json.dumps(sextic_to_document(coeffs))))
    assert list(back.coeffs) == coeffs


def test_document_checks():
    with pytest.raises(DocumentError):
        sextic_from_document({"coefficients": [{"q": "0"}] * 7})
    with pytest.raises(DocumentError):
        sextic_from_document({"coefficients": [{"q": "1"}] * 6})
    with pytest.raises(DocumentError):
        sextic_from_document({"version": 9, "coefficients": [{"q": "1"}] * 7})


# -- commands ---------------------------------------------------------------------------------------


def test_generate_classify_find(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "--seed", "4", "--rotate")
    assert code == EXIT_OK
    doc = json.loads(out)
    path = write(tmp_path, "cubic.json", doc)

    code, out, _ = run(capsys, "classify", "--cubic", path)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["verdict"] == "TwoIcosahedralSets"
    assert set(report["invariants"]) == {"A", "B", "C", "Delta", "J6", "J10"}

    code, out, _ = run(capsys, "find-icosa", "--cubic", path, "--starts", "120", "--seed", "1")
    assert code == EXIT_OK
    found = json.loads(out)
    assert found["class_count"] == 2
    assert found["observed"] == "TwoIcosahedralSets"
    assert all(float(s["residual"]) < 1e-10 for s in found["solutions"])

    code, again, _ = run(capsys, "find-icosa", "--cubic", path, "--starts", "120", "--seed", "1")
    assert again == out


def test_classify_sextic(tmp_path, capsys):
    path = write(tmp_path, "s.json", sextic_to_document([0, 0, 1, -2, 1, 0, 0]))
    code, out, _ = run(capsys, "classify", "--sextic", path)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["verdict"] == "InfinitelyMany"
    assert report["root_partition"] == [2, 2, 2]


def test_classify_precision_flag(tmp_path, capsys):
    path = write(tmp_path, "s.json", sextic_to_document([1, 0, 3, 0, 0, 2, -1]))
    code, out, _ = run(capsys, "classify", "--sextic", path, "--precision", "200")
    assert code == EXIT_OK
    assert json.loads(out)["precision"] == 200


def test_malformed_inputs(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "classify", "--cubic", str(bad))[0] == EXIT_MALFORMED
    assert run(capsys, "classify", "--cubic", str(tmp_path / "missing.json"))[0] == EXIT_MALFORMED
    nonharm = write(tmp_path, "nh.json", {"coefficients": [{"q": "1"}] + [{"q": "0"}] * 9})
    code, _, err = run(capsys, "find-icosa", "--cubic", nonharm)
    assert code == EXIT_MALFORMED and "error" in err
    good = write(tmp_path, "g.json", cubic_to_document(generate_cubic_through(None, seed=0).f))
    assert run(capsys, "find-icosa", "--cubic", good, "--starts", "0")[0] == EXIT_MALFORMED


def test_precision_env(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "s.json", sextic_to_document([1, 0, 0, 0, 0, 0, -1]))
    monkeypatch.setenv("ICOSA_PRECISION_BITS", "20")
    assert run(capsys, "classify", "--sextic", path)[0] == EXIT_MALFORMED
    monkeypatch.setenv("ICOSA_PRECISION_BITS", "96")
    code, out, _ = run(capsys, "classify", "--sextic", path)
    assert code == EXIT_OK and json.loads(out)["precision"] == 96


def test_find_icosa_budget_exhausted(tmp_path, capsys):
    # z1^6: everything sits on the null cone, no nondegenerate set is found
    from icosa.so3_rep import BinaryForm2d, sextic_to_cubic

    f = sextic_to_cubic(BinaryForm2d([1, 0, 0, 0, 0, 0, 0]))
    path = write(tmp_path, "c.json", cubic_to_document(f))
    code, out, _ = run(capsys, "find-icosa", "--cubic", path, "--starts", "40")
    assert code == EXIT_BUDGET
    assert json.loads(out)["observed"] == "DegenerateOnly"


@pytest.mark.parametrize("suite", ["isotropy", "invariants", "special-curve", "mu-constants"])
def test_verify_suites(capsys, suite):
    code, out, err = run(capsys, "verify", suite)
    assert code == EXIT_OK
    summary = json.loads(out)
    assert summary["passed"] and summary["checks"]
    assert "[PASS]" in err and "[FAIL]" not in err


def test_verify_weights_max_d(capsys):
    code, out, _ = run(capsys, "verify", "weights", "--max-d", "4", "--timing")
    assert code == EXIT_OK
    summary = json.loads(out)
    assert len(summary["checks"]) == 3 and "seconds" in summary


def test_verify_reports_failure(capsys, monkeypatch):
    from icosa.cli import suites

    def broken():
        yield suites.Check("always fails", False, "by construction")
        yield suites.Check("never reached", True)

    monkeypatch.setitem(suites.SUITES, "isotropy", broken)
    code, out, err = run(capsys, "verify", "isotropy")
    assert code == EXIT_VERIFY
    assert [c["name"] for c in json.loads(out)["checks"]] == ["always fails"]
    assert "[FAIL]" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "icosa", "--help"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    for name in ("classify", "find-icosa", "verify", "generate"):
        assert name in proc.stdout

import json
from pathlib import Path

import pytest

from sparsepolya.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def d(name):
    return str(DATA / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_certify_sparse(tmp_path, capsys):
    out = tmp_path / "f.cert.json"
    code, stdout, _ = run(capsys, "certify", d("running_f.json"), "--out", str(out))
    assert code == 0 and "N=14" in stdout and "terms=4096" in stdout
    doc = json.loads(out.read_text())
    assert doc["status"] == "Certified"
    assert run(capsys, "verify", str(out))[0] == 0


def test_certify_classical_is_refuted(tmp_path, capsys):
    out = tmp_path / "c.json"
    code, stdout, _ = run(capsys, "certify", d("running_f.json"), "--mode", "classical", "--out", str(out))
    assert code == 1 and "RefutedNewton" in stdout
    assert run(capsys, "verify", str(out))[0] == 0


def test_budget_gives_unknown(tmp_path, capsys):
    out = tmp_path / "u.json"
    code, stdout, _ = run(capsys, "certify", d("running_f.json"), "--nmax", "5", "--out", str(out))
    assert code == 2 and "offenders" in stdout
    assert json.loads(out.read_text())["offender_count"] == 21
    assert run(capsys, "verify", str(out))[0] == 0


def test_tampered_certificate_fails_verify(tmp_path, capsys):
    out = tmp_path / "t.json"
    run(capsys, "certify", d("running_f.json"), "--out", str(out))
    doc = json.loads(out.read_text())
    doc["exponents"] = [13]
    out.write_text(json.dumps(doc))
    code, stdout, _ = run(capsys, "verify", str(out))
    assert code == 1 and "INVALID" in stdout
    code, _, _ = run(capsys, "verify", str(out), "--input", d("running_h.json"))
    assert code == 1


def test_cox_prism_and_pentagon(tmp_path, capsys):
    out = tmp_path / "x.json"
    code, stdout, _ = run(capsys, "cox", d("running_dehom.json"), "--variant", "primitive", "--out", str(out))
    assert code == 0 and "N=38,0" in stdout and "terms=1716" in stdout
    assert run(capsys, "verify", str(out))[0] == 0
    code, _, err = run(capsys, "cox", d("pentagon.json"))
    assert code == 4 and "partition" in err


def test_cox_dehomogenize(tmp_path, capsys):
    out = tmp_path / "h.json"
    code, stdout, _ = run(capsys, "cox", d("running_h.json"), "--dehomogenize", "4", "--nmax", "2",
                          "--out", str(out))
    assert code == 2 and "N=2 terms=55" in stdout
    assert run(capsys, "verify", str(out))[0] == 0
    code, stdout, _ = run(capsys, "cox", d("running_h.json"), "--dehomogenize", "4", "--out", str(out))
    assert code == 0 and "N=12 terms=816" in stdout
    assert run(capsys, "verify", str(out), "--input", d("running_h.json"))[0] == 0
    assert run(capsys, "cox", d("running_h.json"), "--dehomogenize", "9")[0] == 3


def test_emit_product(tmp_path, capsys):
    out = tmp_path / "p.cert.json"
    run(capsys, "certify", d("hexagon.json"), "--out", str(out), "--emit-product")
    prod = json.loads((tmp_path / "p.cert.product.json").read_text())
    assert len(prod["terms"]) == 217
    assert all(not t["coefficient"].startswith("-") for t in prod["terms"])


def test_malformed_json_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "variables": ["t1"],\n  "terms": [[[1], "1"],,]\n}\n')
    code, _, err = run(capsys, "certify", str(bad))
    assert code == 3 and "line 3" in err


def test_usage_errors_exit_three(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["certify", d("running_f.json"), "--frobnicate"])
    assert exc.value.code == 3
    assert run(capsys, "certify", d("running_f.json"), "--nmax", "-1")[0] == 3
    assert run(capsys, "certify", d("running_f.json"), "--mode", "custom")[0] == 3


def test_polytope_and_obj(tmp_path, capsys):
    out, obj = tmp_path / "p.json", tmp_path / "p.obj"
    code, _, _ = run(capsys, "polytope", d("running_dehom.json"), "--out", str(out), "--emit-obj", str(obj))
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["faces"]) == 21
    lines = obj.read_text().splitlines()
    assert sum(ln.startswith("v ") for ln in lines) == 6 and sum(ln.startswith("l ") for ln in lines) == 9
    assert run(capsys, "polytope", d("running_f.json"), "--emit-obj", str(obj))[0] == 3


def test_symanzik_banana(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, _, _ = run(capsys, "symanzik", d("banana.json"), "--emit", "F", "--check-euclidean", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["euclidean"]["verdict"] == "Nonempty"
    code, stdout, _ = run(capsys, "symanzik", d("banana.json"), "--certify", "--params", "{m:1, s:1}",
                          "--convergence", "--nu", "1,1,1", "--dim", "1", "--out", str(out))
    assert code == 0 and "convergent" in stdout
    assert run(capsys, "symanzik", d("banana.json"), "--certify")[0] == 3
    assert run(capsys, "symanzik", d("banana.json"), "--certify", "--params", "{m:1}")[0] == 3


def test_symanzik_empty_region(tmp_path, capsys):
    out = tmp_path / "e.json"
    code, stdout, _ = run(capsys, "symanzik", d("double_box_m2_zero.json"), "--check-euclidean", "--out", str(out))
    assert code == 1 and "Empty" in stdout
    doc = json.loads(out.read_text())
    assert doc["euclidean"]["constant"] == "0" and len(doc["euclidean"]["combination"]) == 3


def test_batch_jobs_deterministic(tmp_path, capsys):
    inputs = [d("running_f.json"), d("hexagon.json"), d("pentagon.json")]
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "certify", *inputs, "--out", str(a))[0] == 0
    assert run(capsys, "certify", *inputs, "--out", str(b), "--jobs", "3")[0] == 0
    for name in ("running_f", "hexagon", "pentagon"):
        assert (a / f"{name}.cert.json").read_bytes() == (b / f"{name}.cert.json").read_bytes()


def test_batch_exit_is_worst(tmp_path, capsys):
    code, _, _ = run(capsys, "cox", d("running_dehom.json"), d("pentagon.json"), "--out", str(tmp_path))
    assert code == 4

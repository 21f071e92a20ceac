import json

from hopfsmith.cli import main


def run(args):
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def test_census_builtin():
    code, out = run(["--json", "--no-timing", "census", "mnd"])
    assert code == 0
    doc = json.loads(out)
    assert doc["census"] == [1, 1, 2]


def test_gray_census():
    code, out = run(["--json", "--no-timing", "gray", "globe1", "globe1"])
    assert code == 0
    assert json.loads(out)["census"] == [4, 4, 1]


def test_smash_census():
    code, out = run(["--json", "--no-timing", "smash", "mnd", "pt", "mnd", "pt"])
    assert code == 0
    assert json.loads(out)["census"] == [1, 0, 1, 4, 4]


def test_census_of_point():
    code, out = run(["--json", "--no-timing", "census", "point"])
    assert code == 0
    assert json.loads(out)["census"] == [1]


def test_shear_check_hopf_fixture():
    code, out = run(["--json", "--no-timing", "shear-check", "QS3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["hopf"] is True
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_shear_check_non_hopf_is_not_failure():
    code, out = run(["--json", "--no-timing", "shear-check", "QM"])
    assert code == 0
    doc = json.loads(out)
    assert doc["hopf"] is False and doc["cohopf"] is False


def test_corrupted_bialgebra_fails(tmp_path):
    from hopfsmith.bialgebra import bialgebra_to_json
    from hopfsmith.fixtures import corrupted_delta, standard_fixtures
    bad = corrupted_delta(standard_fixtures()["QZ2"])
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bialgebra_to_json(bad)))
    code, out = run(["--json", "--no-timing", "shear-check", str(path)])
    assert code == 1
    doc = json.loads(out)
    assert any(c["status"] == "fail" and "witness" in c for c in doc["checks"])


def test_determinism_of_json_reports():
    a = run(["--json", "--no-timing", "shear-check", "sweedler"])
    b = run(["--json", "--no-timing", "shear-check", "sweedler"])
    assert a == b


def test_usage_error_exit_64():
    code, _ = run(["no-such-command"])
    assert code == 64


def test_missing_file_exit_64():
    code, _ = run(["--json", "census", "/nonexistent/file.json"])
    assert code == 64


def test_reconstruct_round_trip():
    code, out = run(["--json", "--no-timing", "reconstruct", "QZ2"])
    assert code == 0
    assert json.loads(out)["verdict"] == "isomorphism"


def test_reconstruct_family_file(tmp_path):
    from hopfsmith.bialgebra import bialgebra_to_json
    from hopfsmith.fixtures import standard_fixtures
    B = standard_fixtures()["QZ2"]
    fam = {
        "bialgebra": bialgebra_to_json(B),
        "comodules": [{"dim": 2, "rho": [["1", "0"], ["0", "0"],
                                         ["0", "0"], ["0", "1"]]}],
        "depth": 2,
    }
    path = tmp_path / "family.json"
    path.write_text(json.dumps(fam))
    code, out = run(["--json", "--no-timing", "reconstruct", str(path)])
    doc = json.loads(out)
    assert doc["coend_dim"] >= 1


def test_proof_skeleton_cli():
    code, out = run(["--json", "--no-timing", "proof-skeleton"])
    assert code == 0
    doc = json.loads(out)
    assert doc["classification_table"]["4-cell"] >= 1


def test_dot_emission(tmp_path):
    dot = tmp_path / "g.dot"
    code, _ = run(["--json", "--no-timing", "gray", "globe1", "globe1",
                   "--dot", str(dot)])
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph") and "->" in text


def test_gray_out_roundtrips(tmp_path):
    out_path = tmp_path / "g.json"
    code, _ = run(["--json", "--no-timing", "gray", "mnd", "mnd",
                   "--out", str(out_path)])
    assert code == 0
    code2, out2 = run(["--json", "--no-timing", "census", str(out_path)])
    assert code2 == 0
    assert json.loads(out2)["census"] == [1, 2, 5, 4, 4]


def test_exit_code_contract():
    from hopfsmith.cli import Report
    r = Report(["x"], timing=False)
    assert r.exit_code() == 0
    r.check("a", "pass")
    assert r.exit_code() == 0
    r.check("b", "unknown")
    assert r.exit_code() == 2
    r.check("c", "fail")
    assert r.exit_code() == 1

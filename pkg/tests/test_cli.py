import json

import pytest

from dextral.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def exported(tmp_path, capsys):
    def export(entry_id, *extra):
        path = tmp_path / f"{entry_id}.json"
        assert main(["catalog", "export", entry_id, "-o", str(path), *extra]) == 0
        return str(path)

    return export


def test_check_s2(exported, capsys):
    code, out, _ = run(capsys, "check", exported("S2"))
    assert code == 0
    assert "no, witness (x, z, z)" in out


def test_check_r1(exported, capsys):
    code, out, _ = run(capsys, "check", exported("R1"))
    assert code == 0
    assert "yes (all_triples_zero)" in out


def test_check_zero_dim(tmp_path, capsys):
    p = tmp_path / "z.json"
    p.write_text(json.dumps({"name": "z", "field": {"kind": "rational"}, "basis": [], "products": []}))
    code, out, _ = run(capsys, "check", str(p), "--json", "-")
    assert code == 0
    report = json.loads(out)
    assert all(c["status"] == "pass" for c in report["checks"])


def test_check_field_transport(exported, capsys):
    code, out, _ = run(capsys, "check", exported("S2"), "--field", "gf:5")
    assert code == 0 and "over GF(5)" in out


def test_report_is_deterministic(exported, tmp_path, capsys):
    path = exported("N7")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["check", path, "--json", str(a)])
    main(["check", path, "--json", str(b)])
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["tool"] == "dextral" and report["input_digest"].startswith("sha256:")


@pytest.mark.parametrize(
    "graph,dextral,iso",
    [
        ({"vertices": ["v"], "edges": [{"name": "f", "src": "v", "rng": "v"}]}, True, "R[x,x^-1]"),
        ({"vertices": ["u", "v"], "edges": [{"name": "e", "src": "u", "rng": "v"}]}, False, None),
        ({"vertices": [], "edges": []}, True, "0"),
    ],
)
def test_leavitt(tmp_path, capsys, graph, dextral, iso):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(graph))
    code, out, _ = run(capsys, "leavitt", str(p), "--json", "-")
    assert code == 0
    c = json.loads(out)["classification"]
    assert c["dextral"] == dextral and c["iso_class"] == iso
    for v in c["violations"]:
        assert v["certificate"] is not None


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "check", str(bad))[0] == 2
    assert run(capsys, "catalog", "export", "N4", "--param", "alpha=5")[0] == 2
    assert run(capsys, "catalog", "export", "nope")[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "verify", "--only", "bogus")[0] == 2
    assert run(capsys, "verify", "--param-samples", "3..1")[0] == 2


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.splitlines()[0].startswith("lnotr")


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "leavitt")
    assert code == 0
    assert out.splitlines()[0] == "PASS    leavitt"


def test_verify_param_samples(capsys):
    code, out, _ = run(capsys, "verify", "--only", "mu2_nilradical", "--param-samples=-1..1", "--json", "-")
    report = json.loads(out)
    assert report["settings"]["param_samples"] == [-1, 0, 1]
    assert code == 0


def test_parse_range():
    assert parse_range("-2..2") == [-2, -1, 0, 1, 2]
    assert parse_range("0,3") == [0, 3]

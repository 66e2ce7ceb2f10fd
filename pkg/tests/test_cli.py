from __future__ import annotations

import json

import pytest

from qspieri import catalog, pieri, qsym
from qspieri.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["--poset", "catalog:young", "--from", "()", "--to", "(2,1)", "--operator", "descent", "--basis", "s"], "1*s(2,1)"),
    (["--poset", "catalog:boolean:2", "--operator", "rank_selection", "--basis", "M"], "1*M(2) + 2*M(1,1)"),
    (["--poset", "catalog:weakB:1", "--operator", "peak", "--from", "e", "--to", "s0", "--basis", "theta"], "1*theta(1)"),
])
def test_kfun_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "kfun", *argv)
    assert code == 0
    assert out.strip() == expected


def test_kfun_roundtrip(capsys):
    code, out, _ = run(capsys, "kfun", "--poset", "catalog:boolean:3", "--operator", "rank_selection", "--basis", "F")
    assert code == 0
    g = catalog.boolean_lattice(3)
    assert qsym.parse(out.strip()) == pieri.kfunction(pieri.RankSelection(g), "{}", "{1,2,3}")


def test_kfun_conversion_failures(capsys, tmp_path):
    code, _, err = run(capsys, "kfun", "--poset", "catalog:chain:3", "--operator", "rank_selection", "--basis", "theta")
    assert code == 1 and "not in peak span" in err
    path = tmp_path / "chain.json"
    path.write_text(catalog.chain(3, (2, 1)).dumps())
    code, out, err = run(capsys, "kfun", "--poset", str(path), "--operator", "descent", "--basis", "F")
    assert code == 0 and out.strip() == "1*F(1,1)"
    path.write_text(catalog.chain(4, (2, 1, 2)).dumps())
    code, _, err = run(capsys, "kfun", "--poset", str(path), "--operator", "descent", "--basis", "s")
    assert code == 1 and "not symmetric" in err
    code, _, err = run(capsys, "expand", "F(2,1)", "--basis", "m")
    assert code == 1 and "not symmetric" in err


def test_kfun_bad_vertex(capsys):
    code, _, err = run(capsys, "kfun", "--poset", "catalog:boolean:2", "--operator", "descent", "--to", "{9}")
    assert code == 1 and err.startswith("qspieri:")


def test_verify_duality(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-degree", "5")
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS (1023 pairings)"


def test_verify_hopf_on_b3(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf", "--poset", "catalog:boolean:3")
    assert code == 0 and out.strip().splitlines()[-1].startswith("PASS")


def test_verify_euler_expected_negative(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "euler", "--poset", "catalog:chain:3")
    assert code == 1
    assert any(line.startswith("FAIL") for line in out.splitlines())


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


@pytest.mark.parametrize("algebra,n,expected", [
    ("pi", 6, "1,1,2,3,5,8"),
    ("xi", 4, "1,1,2,4"),
    ("nc-mod-I", 6, "1,1,2,3,5,8"),
    ("nc-mod-J", 5, "1,1,2,4,7"),
])
def test_dims(capsys, algebra, n, expected):
    code, out, _ = run(capsys, "dims", "--algebra", algebra, "--n", str(n))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "computed:  " + expected
    assert lines[1] == "predicted: " + expected


def test_cost_guard(capsys, monkeypatch):
    monkeypatch.setenv("QSPIERI_MAX_DEGREE", "3")
    code, _, err = run(capsys, "dims", "--algebra", "pi", "--n", "6")
    assert code == 1 and "QSPIERI_MAX_DEGREE" in err
    monkeypatch.setenv("QSPIERI_MAX_DEGREE", "abc")
    code, _, _ = run(capsys, "dims", "--algebra", "pi", "--n", "2")
    assert code == 2


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "F(2,1) + F(1,2)", "--basis", "s")
    assert code == 0 and out.strip() == "1*s(2,1)"
    code, out, _ = run(capsys, "expand", "theta(2)", "--basis", "M")
    assert out.strip() == "2*M(2) + 4*M(1,1)"


def test_export_and_reload(capsys, tmp_path):
    path = tmp_path / "b2.json"
    code, _, _ = run(capsys, "export", "catalog:boolean:2", "-o", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())["edges"]) == 4
    code, out, _ = run(capsys, "kfun", "--poset", str(path), "--operator", "rank_selection")
    assert code == 0 and out.strip() == "1*M(2) + 2*M(1,1)"


def test_halved_and_quantum_operators(capsys):
    code, out, _ = run(capsys, "kfun", "--poset", "catalog:quantum:2:2", "--operator", "quantum",
                       "--from", "(1,2)", "--to", "(2,4)", "--basis", "s")
    assert code == 0 and out.strip() == "1*s(2,1)"
    code, out, _ = run(capsys, "kfun", "--poset", "catalog:bruhat0B:2", "--operator", "halved",
                       "--from", "(1,2)", "--to", "(-2,-1)", "--basis", "M")
    assert code == 0 and out.strip() == "1*M(1,2) + 1*M(2,1) + 1*M(1,1,1)"

"""End-to-end checks of the command-line surface."""
import json

import pytest

from src import cli

TRIANGLE = {"n": 3, "sigma": "(1 3)(2 5)(4 6)"}
EXAMPLE = {"sigma": "(1)(2 3 4)", "alpha": "(1 2)(3 4)"}
TORUS_MATRIX = {
    "n": 4,
    "mode": "orthogonal",
    "rows": [
        ["1", "0", "0", "0", "0", "0", "-1", "0"],
        ["0", "1", "1", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "-1", "1", "0"],
        ["0", "0", "0", "0", "0", "0", "0", "1"],
    ],
}


def run(capsys, tmp_path, command, doc, *flags):
    path = tmp_path / "input.json"
    path.write_text(json.dumps(doc))
    code = cli.main([command, "--input", str(path), *flags])
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_info(capsys, tmp_path):
    code, result, _ = run(capsys, tmp_path, "info", EXAMPLE)
    assert code == 0
    assert result["status"] == "ok"
    payload = result["payload"]
    assert (payload["vertices"], payload["edges"], payload["faces"]) == (2, 2, 2)
    assert payload["genus"] == 0
    assert payload["phi"] == [[1, 4, 2], [3]]
    assert payload["group_order"] == 12
    assert payload["planar"] is True


def test_info_single_edge(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "info", {"sigma": "(1)(2)"})
    payload = result["payload"]
    assert (payload["vertices"], payload["edges"], payload["faces"], payload["group_order"]) == (2, 1, 1, 2)


def test_malformed_alpha_is_a_domain_error(capsys, tmp_path):
    code, result, _ = run(capsys, tmp_path, "info", {"sigma": "(1)(2 3 4)", "alpha": "(1 2)(3)(4)"})
    assert code == 1
    assert result["status"] == "error"
    assert result["payload"] is None
    assert result["diagnostics"]


@pytest.mark.parametrize("command,doc", [
    ("matroid-check", {"n": 3, "bases": [123]}),
    ("polytope", {"n": True, "bases": ["1"]}),
    ("act", {"n": 3, "vertices": [1, 2, 3]}),
    ("minors", {"n": 2, "rows": [[[1], 0, 0, 0], [0, 1, 0, 0]]}),
])
def test_malformed_fields_are_domain_errors(capsys, tmp_path, command, doc):
    flags = ["--word", "(1 1*)"] if command == "act" else []
    code, result, _ = run(capsys, tmp_path, command, doc, *flags)
    assert code == 1
    assert result["status"] == "error"
    assert result["diagnostics"]


def test_undecodable_input_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "input.json"
    path.write_bytes(b"\xff\xfe{}")
    assert cli.main(["info", "--input", str(path)]) == 2
    result = json.loads(capsys.readouterr().out)
    assert result["status"] == "error"
    assert result["payload"] is None


def test_usage_errors(capsys, tmp_path):
    assert cli.main(["no-such-command"]) == 2
    assert json.loads(capsys.readouterr().out)["status"] == "error"
    assert cli.main(["info", "--input", str(tmp_path / "missing.json")]) == 2
    assert json.loads(capsys.readouterr().out)["status"] == "error"
    code, _, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", "1,x")
    assert code == 2


def test_pdual(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", "3")
    assert result["payload"]["faces"] == 1
    _, everything, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", "1,2,3")
    _, dual, _ = run(capsys, tmp_path, "dual", TRIANGLE)
    assert everything["payload"] == dual["payload"]
    _, nothing, _ = run(capsys, tmp_path, "pdual", TRIANGLE)
    _, info, _ = run(capsys, tmp_path, "info", TRIANGLE)
    assert nothing["payload"]["sigma"] == info["payload"]["sigma"]


def test_pdual_twice_round_trips(capsys, tmp_path):
    _, once, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", "1,3")
    # the envelope itself is accepted as input
    _, twice, _ = run(capsys, tmp_path, "pdual", once, "--edges", "1,3")
    _, original, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", "")
    assert twice == original


def test_bases_and_matroid_check(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "bases", TRIANGLE)
    assert result["payload"]["bases"] == ["123*", "12*3", "1*23"]
    _, check, _ = run(capsys, tmp_path, "matroid-check", result)
    assert check["payload"] == {"ok": True, "witness": None, "is_matroid": True}
    _, bad, _ = run(capsys, tmp_path, "matroid-check", {"n": 3, "bases": ["123", "1*2*3*"]})
    assert bad["payload"]["ok"] is False
    assert bad["payload"]["witness"] == ["123", "1*2*3*", 1]


def test_represent_then_minors(capsys, tmp_path):
    _, rep, _ = run(capsys, tmp_path, "represent", TRIANGLE)
    assert rep["payload"]["mode"] == "orthogonal"
    _, minors, _ = run(capsys, tmp_path, "minors", rep)
    assert minors["payload"]["bases"] == ["123*", "12*3", "1*23"]
    _, chosen, _ = run(capsys, tmp_path, "represent", TRIANGLE, "--base", "1*23")
    _, again, _ = run(capsys, tmp_path, "minors", chosen)
    assert again["payload"]["bases"] == ["123*", "12*3", "1*23"]
    code, _, _ = run(capsys, tmp_path, "represent", TRIANGLE, "--base", "123")
    assert code == 1


def test_minors_of_the_torus_matrix(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "minors", TORUS_MATRIX)
    assert result["payload"]["bases"] == ["123*4*", "12*34*", "1*2*3*4*"]
    assert result["payload"]["isotropic"] is True
    code, _, _ = run(capsys, tmp_path, "minors", TORUS_MATRIX, "--mode", "symplectic")
    assert code == 1


def test_polytope_and_gs_check(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "polytope", TRIANGLE)
    assert result["payload"]["vertices"] == [[1, 1, -1], [1, -1, 1], [-1, 1, 1]]
    assert result["payload"]["edges"] == [[0, 1], [0, 2], [1, 2]]
    _, ok, _ = run(capsys, tmp_path, "gs-check", TRIANGLE)
    assert ok["payload"]["ok"] is True
    _, bad, _ = run(capsys, tmp_path, "gs-check", {"n": 3, "bases": ["123", "1*2*3*"]})
    assert bad["payload"]["ok"] is False
    assert bad["payload"]["difference"] == [2, 2, 2]


def test_act_dispatches_on_the_document(capsys, tmp_path):
    _, on_map, _ = run(capsys, tmp_path, "act", TRIANGLE, "--word", "(1 1*)")
    assert on_map["payload"]["genus"] == 1
    _, on_bases, _ = run(capsys, tmp_path, "act", {"n": 3, "bases": ["12*3"]}, "--word", "(1 2)(1* 2*)")
    assert on_bases["payload"]["bases"] == ["1*23"]
    _, rep, _ = run(capsys, tmp_path, "represent", TRIANGLE)
    _, on_rows, _ = run(capsys, tmp_path, "act", rep, "--word", "(1 1*)")
    _, minors, _ = run(capsys, tmp_path, "minors", on_rows)
    assert sorted(minors["payload"]["bases"]) == sorted(["1*23*", "1*2*3", "123"])
    _, polytope, _ = run(capsys, tmp_path, "polytope", TRIANGLE)
    _, reflected, _ = run(capsys, tmp_path, "act", polytope, "--word", "(1 1*)")
    assert reflected["payload"]["vertices"] == [[1, 1, 1], [-1, 1, -1], [-1, -1, 1]]
    code, _, _ = run(capsys, tmp_path, "act", TRIANGLE, "--word", "(1 2)")
    assert code == 1


def test_orbit(capsys, tmp_path):
    _, result, _ = run(capsys, tmp_path, "orbit", TRIANGLE)
    rows = result["payload"]
    assert len(rows) == 8
    assert sum(row["genus"] == 1 for row in rows) == 3
    assert [row["subset"] for row in rows if row["one_face"]] == [[1], [2], [3]]


def test_orbit_guardrail(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr("src.config.MAX_EDGES", 2)
    code, result, _ = run(capsys, tmp_path, "orbit", TRIANGLE)
    assert code == 1
    assert "edges" in result["diagnostics"][0]


def test_iso(capsys, tmp_path):
    duals = []
    for edge in ("1", "2"):
        _, result, _ = run(capsys, tmp_path, "pdual", TRIANGLE, "--edges", edge)
        duals.append(result["payload"])
    _, result, _ = run(capsys, tmp_path, "iso", duals)
    assert result["payload"]["isomorphic"] is True
    _, result, _ = run(capsys, tmp_path, "iso", [TRIANGLE, duals[0]])
    assert result["payload"] == {"isomorphic": False, "bijection": None}


@pytest.mark.parametrize("command", ["info", "bases", "orbit", "polytope"])
def test_output_is_deterministic(capsys, tmp_path, command):
    _, _, first = run(capsys, tmp_path, command, TRIANGLE)
    _, _, second = run(capsys, tmp_path, command, TRIANGLE)
    assert first == second


def test_act_on_a_symplectic_matrix(capsys, tmp_path):
    doc = {"n": 3, "mode": "symplectic", "rows": [
        ["1", "1", "1", "0", "0", "0"],
        ["0", "0", "0", "1", "1", "-2"],
        ["2", "0", "1", "-2", "1", "1"],
    ]}
    _, before, _ = run(capsys, tmp_path, "minors", doc)
    _, acted, _ = run(capsys, tmp_path, "act", doc, "--word", "(1 1*)")
    assert acted["payload"]["mode"] == "symplectic"
    code, after, _ = run(capsys, tmp_path, "minors", acted)
    assert code == 0
    assert after["payload"]["isotropic"] is True
    assert sorted(before["payload"]["bases"]) == sorted(["123*", "12*3", "12*3*", "1*23", "1*23*", "1*2*3"])
    assert sorted(after["payload"]["bases"]) == sorted(["1*23*", "1*2*3", "1*2*3*", "123", "123*", "12*3"])

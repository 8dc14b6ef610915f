import json

import pytest

from shiftlab import from_facets, to_json
from shiftlab.complexes import from_json_dict
from shiftlab.cli import main


@pytest.fixture
def cycle_path(tmp_path):
    cx = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    path = tmp_path / "cycle.json"
    path.write_text(to_json(cx))
    return str(path)


@pytest.fixture
def path_graph_path(tmp_path):
    cx = from_facets(3, [[1, 2], [1, 3]])
    path = tmp_path / "path.json"
    path.write_text(to_json(cx))
    return str(path)


def test_fvector_command(cycle_path, capsys):
    assert main(["fvector", cycle_path]) == 0
    assert json.loads(capsys.readouterr().out) == [4, 4]


def test_betti_command_hochster(cycle_path, capsys):
    assert main(["betti", cycle_path, "--field", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0\t2\t2", "1\t3\t1"]


def test_betti_command_shifted(tmp_path, capsys):
    cx = from_facets(3, [[1, 3], [2, 3]])
    path = tmp_path / "c.json"
    path.write_text(to_json(cx))
    assert main(["betti", str(path), "--method", "shifted"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0\t2\t1"]


def test_shift_command_pairs(path_graph_path, capsys):
    assert main(["shift", path_graph_path, "--pairs", "2,3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sequence"] == [[2, 3]]
    assert from_json_dict({k: doc[k] for k in ("n", "facets", "mode")}).n == 3


def test_shift_command_auto(path_graph_path, capsys):
    for strategy in ("sweep", "random"):
        assert main(["shift", path_graph_path, "--auto", strategy, "--seed", "5"]) == 0
        doc = json.loads(capsys.readouterr().out)
        got = from_json_dict({k: doc[k] for k in ("n", "facets", "mode")})
        assert sorted(map(sorted, doc["facets"])) == [[1, 3], [2, 3]]
        assert got.n == 3


def test_enumerate_command(path_graph_path, capsys):
    assert main(["enumerate", path_graph_path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    json.loads(lines[0])


def test_gin_command(path_graph_path, capsys):
    assert main(["gin", path_graph_path, "--seed", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"complex", "pivot_report"}
    degrees = [row["degree"] for row in doc["pivot_report"]]
    assert degrees == sorted(degrees)
    for row in doc["pivot_report"]:
        assert row["pivot_count"] >= len(row["new_generators"])


def test_lex_command(cycle_path, capsys):
    assert main(["lex", cycle_path]) == 0
    doc = json.loads(capsys.readouterr().out)
    got = from_json_dict(doc)
    assert got.n == 4


def test_verify_command(capsys):
    assert main(["verify", "--n", "4", "--trials", "3", "--seed", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["trials"] == 3 and doc["failures"] == []


def test_section4_build_command(capsys):
    assert main(["section4", "--phase", "build"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 15

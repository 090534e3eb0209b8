import json
import subprocess
import sys

import pytest

from prographs.cli import main

SELF_DUAL = "[[1,2,5,6],[3,4,9,10],[7,8,11,12]]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--n", "3") == (0, "42\n", "")
    assert run(capsys, "count", "--n", "2", "--family", "trees")[1] == "2\n"


def test_stats(capsys):
    assert run(capsys, "stats", "--a274969", "--n", "6")[1] == "4488\n"
    assert run(capsys, "stats", "--cat-poly", "--n", "4", "--format", "text")[1] == "1 + 3q + 5q^2 + 5q^3\n"
    data = json.loads(run(capsys, "stats", "--n", "4")[1])
    assert data["truncated_square_sum"] == data["a274969"] == data["coproducts_first_tableaux"] == 121


def test_lattice_check(capsys):
    assert run(capsys, "lattice-check", "--n", "2") == (0, "lattice: true\n", "")
    code, out, _ = run(capsys, "lattice-check", "--n", "3")
    assert code == 0 and out.startswith("lattice: false\n") and "no join" in out


def test_conversions(capsys):
    _, out, _ = run(capsys, "to-prograph", "--json", SELF_DUAL)
    prog = json.loads(out)
    assert prog["n"] == 4
    _, out, _ = run(capsys, "to-tableau", "--json", json.dumps(prog))
    assert json.loads(out)["rows"] == json.loads(SELF_DUAL)
    _, out, _ = run(capsys, "dual", "--json", SELF_DUAL)
    tr = json.loads(out)
    assert len(tr["triangles"]) == 10
    _, out, _ = run(capsys, "convert", "--to", "tableau", "--json", json.dumps(tr))
    assert json.loads(out)["rows"] == json.loads(SELF_DUAL)
    _, out, _ = run(capsys, "involution", "--json", SELF_DUAL)
    assert json.loads(out)["rows"] == json.loads(SELF_DUAL)


def test_input_file(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"n": 2, "rows": [[1, 3], [2, 5], [4, 6]]}))
    code, out, _ = run(capsys, "successors", "--input", str(f), "--format", "text")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "successors", "--input", str(f), "--rules", "A")
    assert [s["rule"] for s in json.loads(out)] == ["A"]


def test_rotate_and_flip(capsys):
    top = "[[1,3],[2,5],[4,6]]"
    code, out, _ = run(capsys, "rotate", "--json", top, "--edge", "0")
    assert code == 0
    code, out, _ = run(capsys, "to-tableau", "--json", out)
    assert json.loads(out)["rows"] == [[1, 2], [3, 5], [4, 6]]
    code, out, _ = run(capsys, "flip", "--json", top)
    listing = json.loads(out)
    assert sum(r["flippable"] for r in listing) == 3
    k = next(r["edge"] for r in listing if r["flippable"])
    assert run(capsys, "flip", "--json", top, "--edge", str(k))[0] == 0


def test_glue_and_tamari(capsys):
    code, out, _ = run(capsys, "glue", "--product", "(..)", "--coproduct", "(..)")
    assert code == 0 and json.loads(out)["n"] == 1
    data = json.loads(run(capsys, "tamari", "--n", "3")[1])
    assert len(data["elements"]) == 5 and len(data["covers"]) == 5


def test_poset_formats(capsys):
    data = json.loads(run(capsys, "poset", "--n", "2")[1])
    assert len(data["elements"]) == 5 and len(data["covers"]) == 6
    assert run(capsys, "poset", "--n", "2", "--format", "dot")[1].startswith("digraph hasse")
    assert "tikzpicture" in run(capsys, "poset", "--n", "2", "--format", "tikz")[1]
    restricted = json.loads(run(capsys, "poset", "--n", "3", "--rules", "A,B", "--restrict", "no-type-vii")[1])
    assert len(restricted["elements"]) == 25


def test_enumerate_with_seed_is_deterministic(capsys):
    a = run(capsys, "enumerate", "--n", "3", "--seed", "5")[1]
    b = run(capsys, "enumerate", "--n", "3", "--seed", "5")[1]
    assert a == b and len(json.loads(a)) == 1
    assert len(json.loads(run(capsys, "enumerate", "--n", "2", "--family", "tableaux")[1])) == 5


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "rotate", "--json", "[[1,2],[3,4],[5,6]]", "--edge", "0")
    assert code == 1 and "admits no rule" in err
    code, _, err = run(capsys, "to-prograph", "--json", "[[2,1],[3,4],[5,6]]")
    assert code == 1


def test_malformed_input_names_the_field(capsys):
    code, _, err = run(capsys, "to-tableau", "--json", '{"n": 1, "operators": []}')
    assert code == 2 and "edges" in err
    code, _, err = run(capsys, "dual", "--json", '{"n": 1, "operators": [{"id": 0, "kind": "x"}], "edges": []}')
    assert code == 2 and "operators[0].kind" in err
    code, _, err = run(capsys, "to-prograph", "--json", "{not json")
    assert code == 2 and "not valid JSON" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "--n", "three"])
    assert info.value.code == 2
    assert run(capsys, "count")[0] == 2


def test_check_all_is_byte_identical(tmp_path):
    cmd = [sys.executable, "-m", "prographs", "check-all", "--max-n", "3", "--cache-dir", str(tmp_path)]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode().rstrip().endswith("48/48 checks passed")


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--n", "2", "--out", str(tmp_path), "--format", "dot")
    assert code == 0
    assert len(list(tmp_path.glob("*.dot"))) == 5 * 3 + 1

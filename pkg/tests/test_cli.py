import json

import pytest

from rolecol.cli import run
from rolecol.graph import build_graph, cycle_graph, path_graph, star_graph
from rolecol.io import parse_colouring, parse_graph, write_cnf, write_graph
from rolecol.oracle import solve_exact
from rolecol.roles import validate
from rolecol.satreduce import CnfFormula


@pytest.fixture()
def files(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return tmp_path, _write


def test_solve_path(files, capsys):
    tmp, write = files
    p4 = write("p4.col", write_graph(path_graph(5)))
    assert run(["solve", "--k", "2", "--input", p4]) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == {"k": 2, "colours": [1, 2, 1, 2, 1]}
    assert run(["solve", "--k", "4", "--input", p4]) == 1
    assert capsys.readouterr().out == ""


def test_solve_methods_agree_with_brute(files, capsys):
    tmp, write = files
    fixtures = [
        path_graph(6),
        star_graph(4),
        build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
        cycle_graph(4),
        cycle_graph(5),
        build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
    ]
    for idx, g in enumerate(fixtures):
        path = write(f"g{idx}.col", write_graph(g))
        for k in range(1, g.n + 1):
            auto = run(["solve", "--k", str(k), "--input", path])
            capsys.readouterr()
            brute = run(["solve", "--k", str(k), "--input", path, "--method", "brute"])
            capsys.readouterr()
            assert auto == brute, (idx, k)
            assert auto in (0, 1)


def test_solve_output_validates(files, capsys):
    tmp, write = files
    g = star_graph(5)
    path = write("star.col", write_graph(g))
    assert run(["solve", "--k", "3", "--input", path]) == 0
    rc = parse_colouring(capsys.readouterr().out)
    assert validate(g, rc)


def test_solve_method_mismatch(files, capsys):
    tmp, write = files
    c5 = write("c5.col", write_graph(cycle_graph(5)))
    assert run(["solve", "--k", "2", "--input", c5, "--method", "path"]) == 2
    assert run(["solve", "--k", "2", "--input", c5, "--method", "cograph"]) == 2


def test_solve_parse_error_names_line(files, capsys):
    tmp, write = files
    bad = write("bad.col", "p edge 2 1\ne 1 5\n")
    assert run(["solve", "--k", "1", "--input", bad]) == 2
    assert ":2:" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert run(["solve", "--k", "2"]) == 2  # missing --input
    capsys.readouterr()
    assert run(["nonsense"]) == 2
    capsys.readouterr()


def test_verify(files, capsys):
    tmp, write = files
    p2 = write("p2.col", write_graph(path_graph(3)))
    good = write("good.json", '{"k": 2, "colours": [1, 2, 1]}')
    bad = write("bad.json", '{"k": 2, "colours": [1, 1, 2]}')
    assert run(["verify", "--input", p2, "--colouring", good]) == 0
    assert run(["verify", "--input", p2, "--colouring", bad]) == 1
    capsys.readouterr()


def test_rolegraph(files, capsys):
    tmp, write = files
    p3 = write("p3.col", write_graph(path_graph(4)))
    col = write("col.json", '{"k": 2, "colours": [1, 2, 2, 1]}')
    assert run(["rolegraph", "--input", p3, "--colouring", col]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"k": 2, "edges": [[1, 2]], "loops": [2]}
    assert run(["rolegraph", "--input", p3, "--colouring", col, "--dot"]) == 0
    assert "--" in capsys.readouterr().out
    invalid = write("inv.json", '{"k": 2, "colours": [1, 1, 2, 1]}')
    assert run(["rolegraph", "--input", p3, "--colouring", invalid]) == 1


def test_oracle_command(files, capsys):
    tmp, write = files
    p4 = write("p4.col", write_graph(path_graph(5)))
    assert run(["oracle", "--input", p4, "--k", "3"]) == 0
    rc = parse_colouring(capsys.readouterr().out)
    assert validate(path_graph(5), rc)
    assert run(["oracle", "--input", p4, "--k", "4"]) == 1
    capsys.readouterr()
    assert run(["oracle", "--input", p4, "--all-k"]) == 0
    assert json.loads(capsys.readouterr().out) == {"solvable_k": [1, 2, 3, 5]}
    assert run(["oracle", "--input", p4]) == 2
    capsys.readouterr()


def test_reduce_oracle_extract_pipeline(files, capsys):
    tmp, write = files
    cnf = write("formula.cnf", write_cnf(CnfFormula(2, ((1, 2), (-2,)))))
    out = str(tmp / "reduction.col")
    assert run(["reduce", "--cnf", cnf, "--k", "2", "--out", out]) == 0
    capsys.readouterr()
    g = parse_graph((tmp / "reduction.col").read_text())
    assert g.n == 12
    labels = json.loads((tmp / "reduction.col.labels.json").read_text())
    assert labels["k"] == 2

    rc = solve_exact(g, 2)
    col = write("found.json", json.dumps({"k": 2, "colours": list(rc.colours)}))
    assert run(["extract", "--cnf", cnf, "--k", "2", "--graph", out, "--colouring", col]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"assignment": {"x1": True, "x2": False}}


def test_extract_rejects_mismatched_graph(files, capsys):
    tmp, write = files
    cnf = write("formula.cnf", write_cnf(CnfFormula(2, ((1, 2), (-2,)))))
    other = write("other.col", write_graph(path_graph(12)))
    col = write("c.json", '{"k": 2, "colours": [1,2,1,2,1,2,1,2,1,2,1,2]}')
    assert run(["extract", "--cnf", cnf, "--k", "2", "--graph", other, "--colouring", col]) == 2
    capsys.readouterr()


def test_graph_roundtrip_through_files(files):
    tmp, write = files
    for g in [path_graph(7), star_graph(3), cycle_graph(6)]:
        text = write_graph(g)
        assert write_graph(parse_graph(text)) == text

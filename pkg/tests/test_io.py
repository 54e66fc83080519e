import json

import pytest

from rolecol.graph import build_graph, path_graph
from rolecol.io import (
    ParseError,
    parse_cnf,
    parse_colouring,
    parse_graph,
    role_graph_to_dot,
    to_dot,
    write_cnf,
    write_colouring,
    write_graph,
    write_reduction_labels,
)
from rolecol.roles import RoleColouring, role_graph
from rolecol.satreduce import CnfFormula, build_reduction_k2


def test_graph_roundtrip():
    for g in [path_graph(5), build_graph(1, []), build_graph(4, [(0, 3), (1, 2)])]:
        assert parse_graph(write_graph(g)) == g


def test_graph_parse_comments_and_dedup():
    text = "c a comment\np edge 3 2\ne 1 2\ne 2 1\ne 2 3\n"
    assert parse_graph(text) == build_graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("e 1 2\n", ":1:"),
        ("p edge 0 0\n", "must be >= 1"),
        ("p edge 2 1\ne 1 3\n", ":2:"),
        ("p edge 2 1\ne 1 1\n", "self-loop"),
        ("p edge x 1\n", "bad vertex count"),
        ("junk\n", "unrecognised"),
        ("", "missing"),
        ("p edge 2 0\np edge 2 0\n", "duplicate"),
    ],
)
def test_graph_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_graph(text, source="f.col")
    assert fragment in str(err.value)


def test_colouring_roundtrip():
    rc = RoleColouring(3, (1, 2, 3, 2, 1))
    assert parse_colouring(write_colouring(rc)) == rc
    with pytest.raises(ParseError):
        parse_colouring("{}")
    with pytest.raises(ParseError):
        parse_colouring("not json")
    with pytest.raises(ParseError):
        parse_colouring('{"k": 2, "colours": ["a"]}')


def test_cnf_roundtrip():
    phi = CnfFormula(3, ((1, -2), (2, 3), (-1,)))
    assert parse_cnf(write_cnf(phi)) == phi


def test_cnf_parse_errors():
    with pytest.raises(ParseError):
        parse_cnf("1 2 0\n")  # clause before header
    with pytest.raises(ParseError):
        parse_cnf("p cnf 2 1\n3 0\n")  # literal out of range
    with pytest.raises(ParseError):
        parse_cnf("p cnf 2 2\n1 0\n")  # clause count mismatch
    with pytest.raises(ParseError):
        parse_cnf("p cnf 1 1\n1 -1 0\n")  # tautological clause


def test_cnf_multiline_clause():
    phi = parse_cnf("p cnf 3 1\n1 2\n3 0\n")
    assert phi.clauses == ((1, 2, 3),)


def test_dot_output():
    g = path_graph(3)
    dot = to_dot(g, RoleColouring(2, (1, 2, 1)))
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot and "1 -- 2;" in dot
    assert "fillcolor" in dot

    r = role_graph(g, RoleColouring(2, (1, 2, 1)))
    rdot = role_graph_to_dot(r)
    assert "1 -- 2;" in rdot


def test_reduction_label_sidecar():
    rg = build_reduction_k2(CnfFormula(2, ((1, 2), (-2,))))
    data = json.loads(write_reduction_labels(rg))
    assert data["k"] == 2
    assert data["vertex_labels"]["1"] == "x1"
    assert len(data["vertex_labels"]) == 12

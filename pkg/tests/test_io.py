import json

import pytest
from hypothesis import given

from molperception import io
from molperception.errors import DomainError, FormatError
from molperception.lgraph import LabelledGraph, Selector
from molperception.perception import Environment
from molperception.reactions import Reaction, ReactionSystem

from .conftest import automata, graphs


def roundtrip(obj, reader):
    return reader(json.loads(io.dumps(obj)))


@pytest.mark.parametrize("name", ["GENERIC", "PERCEPTION", "PFK"])
def test_catalog_roundtrip(name, request):
    a = request.getfixturevalue(name)
    assert roundtrip(a, io.automaton_from_dict) == a


@given(automata(partition=True))
def test_automaton_roundtrip(a):
    back = roundtrip(a, io.automaton_from_dict)
    assert back == a
    assert io.dumps(back) == io.dumps(a)


@given(graphs())
def test_graph_roundtrip(g):
    assert roundtrip(g, io.graph_from_dict) == g


def test_selector_roundtrip():
    s = Selector({"a"}, {("a", "b", "x")})
    assert roundtrip(s, io.selector_from_dict) == s


def test_system_roundtrip():
    g = LabelledGraph({"a", "b"}, {"x", "i"}, {("a", "b", "x"), ("b", "a", "i")})
    b = Reaction(g.subgraph({"a"}), Selector((), {("b", "a", "i")}), g.subgraph(edges={("a", "b", "x")}), "go")
    system = ReactionSystem(g, [b])
    assert roundtrip(system, io.system_from_dict) == system


def test_environment_roundtrip():
    g = LabelledGraph({"e", "m"}, {"s", "c", "p", "r", "i"}, {("e", "m", "s")})
    env = Environment(g, {"e"}, {"s"}, {"i"})
    assert roundtrip(env, io.environment_from_dict) == env
    with_roles = Environment(g, {"e"}, {"s"}, {"i"}, roles={"s": "s", "c": "c", "p": "p", "r": "r"})
    doc = io.to_dict(with_roles)
    assert doc["roles"]["p"] == "p"
    assert io.environment_from_dict(doc) == with_roles


def test_kind_defaults_to_unspecified():
    doc = {"states": [{"name": "q"}], "alphabet": ["a"], "initial": "q", "finals": [], "transitions": []}
    a = io.automaton_from_dict(doc)
    assert not a.has_partition


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"states": [], "alphabet": []},
        {"states": [{"name": "q"}], "alphabet": ["a"], "initial": "q", "finals": [], "transitions": [], "x": 1},
        {"states": [{"name": "q", "kind": "odd"}], "alphabet": [], "initial": "q", "finals": [], "transitions": []},
        {
            "states": [{"name": "q", "kind": "stable"}, {"name": "r"}],
            "alphabet": [], "initial": "q", "finals": [], "transitions": [],
        },
        {"states": [{"name": "q"}], "alphabet": ["eps"], "initial": "q", "finals": [], "transitions": []},
        {"states": [{"name": "q"}], "alphabet": ["a"], "initial": 3, "finals": [], "transitions": []},
        {"states": [{"name": "q"}], "alphabet": ["a"], "initial": "q", "finals": [],
         "transitions": [{"from": "q", "input": "a", "to": "q"}]},
    ],
)
def test_bad_automaton_documents(doc):
    with pytest.raises(FormatError):
        io.automaton_from_dict(doc)


def test_semantic_errors_are_domain_errors():
    doc = {"states": [{"name": "q"}], "alphabet": ["a"], "initial": "z", "finals": [], "transitions": []}
    with pytest.raises(DomainError):
        io.automaton_from_dict(doc)


@pytest.mark.parametrize(
    "doc",
    [
        {"nodes": ["a"], "labels": ["x"]},
        {"nodes": ["a"], "labels": ["x"], "edges": [["a", "a"]]},
        {"nodes": "a", "labels": ["x"], "edges": []},
    ],
)
def test_bad_graph_documents(doc):
    with pytest.raises(FormatError):
        io.graph_from_dict(doc)


def test_bad_roles():
    g = io.graph_to_dict(LabelledGraph({"e"}, {"s"}, ()))
    doc = {"graph": g, "enzymes": ["e"], "enabler": [], "inhibitor_alphabet": [], "roles": ["s"]}
    with pytest.raises(FormatError):
        io.environment_from_dict(doc)


def test_read_json(tmp_path):
    good = tmp_path / "g.json"
    good.write_text('{"a": 1}')
    assert io.read_json(good) == {"a": 1}
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(FormatError):
        io.read_json(bad)
    with pytest.raises(FormatError):
        io.read_json(tmp_path / "missing.json")


def test_to_dict_rejects_other_types():
    with pytest.raises(TypeError):
        io.to_dict(42)

"""JSON documents for automata, graphs, selectors, systems and environments.

Every ``*_to_dict`` function emits lists in sorted order, so
``json.dumps(..., sort_keys=True)`` of equal objects gives equal text.
The ``*_from_dict`` functions raise :class:`FormatError` on schema
violations; semantic violations surface as the usual domain errors.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .automata import EPSILON, KINDS, PERCEIVING, STABLE, Automaton
from .errors import FormatError
from .lgraph import LabelledGraph, Selector
from .perception import Environment
from .reactions import Reaction, ReactionSystem


def _require(doc: Any, keys, what: str, optional=()) -> dict:
    if not isinstance(doc, dict):
        raise FormatError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"{what} is missing {', '.join(missing)}")
    extra = set(doc) - set(keys) - set(optional)
    if extra:
        raise FormatError(f"{what} has unknown fields {', '.join(sorted(extra))}")
    return doc


def _strings(value: Any, what: str) -> list:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise FormatError(f"{what} must be a list of strings")
    return value


def _string(value: Any, what: str) -> str:
    if not isinstance(value, str):
        raise FormatError(f"{what} must be a string")
    return value


def _edge_list(value: Any, what: str) -> list:
    if not isinstance(value, list):
        raise FormatError(f"{what} must be a list of [source, target, label] triples")
    out = []
    for e in value:
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(v, str) for v in e)):
            raise FormatError(f"{what} must be a list of [source, target, label] triples")
        out.append(tuple(e))
    return out


def automaton_to_dict(a: Automaton) -> dict:
    table = {}
    for src, x, dst in a.edges:
        table.setdefault((src, x), []).append(dst)
    return {
        "states": [{"name": q, "kind": a.kind(q)} for q in sorted(a.states)],
        "alphabet": sorted(a.alphabet),
        "initial": a.initial,
        "finals": sorted(a.finals),
        "transitions": [
            {"from": src, "input": x, "to": sorted(dsts)} for (src, x), dsts in sorted(table.items())
        ],
    }


def automaton_from_dict(doc: Any) -> Automaton:
    doc = _require(doc, ("states", "alphabet", "initial", "finals", "transitions"), "automaton")
    if not isinstance(doc["states"], list):
        raise FormatError("automaton states must be a list")
    states, stable, perceiving = [], [], []
    for s in doc["states"]:
        s = _require(s, ("name",), "state", optional=("kind",))
        name = _string(s["name"], "state name")
        kind = s.get("kind", "unspecified")
        if kind not in KINDS:
            raise FormatError(f"state {name!r} has unknown kind {kind!r}")
        states.append(name)
        if kind == STABLE:
            stable.append(name)
        elif kind == PERCEIVING:
            perceiving.append(name)
    if (stable or perceiving) and len(stable) + len(perceiving) != len(states):
        raise FormatError("either every state has a stable/perceiving kind or none does")
    alphabet = _strings(doc["alphabet"], "alphabet")
    if EPSILON in alphabet:
        raise FormatError(f"{EPSILON!r} must not appear in the alphabet")
    if not isinstance(doc["transitions"], list):
        raise FormatError("transitions must be a list")
    edges = []
    for t in doc["transitions"]:
        t = _require(t, ("from", "input", "to"), "transition")
        src = _string(t["from"], "transition source")
        x = _string(t["input"], "transition input")
        for dst in _strings(t["to"], "transition targets"):
            edges.append((src, x, dst))
    return Automaton(
        states=states,
        alphabet=alphabet,
        edges=edges,
        initial=_string(doc["initial"], "initial state"),
        finals=_strings(doc["finals"], "finals"),
        stable=stable,
        perceiving=perceiving,
    )


def graph_to_dict(g: LabelledGraph) -> dict:
    return {
        "nodes": g.sorted_nodes(),
        "labels": sorted(g.labels),
        "edges": [list(e) for e in g.sorted_edges()],
    }


def graph_from_dict(doc: Any) -> LabelledGraph:
    doc = _require(doc, ("nodes", "labels", "edges"), "graph")
    return LabelledGraph(
        _strings(doc["nodes"], "graph nodes"),
        _strings(doc["labels"], "graph labels"),
        _edge_list(doc["edges"], "graph edges"),
    )


def selector_to_dict(s: Selector) -> dict:
    return {"nodes": sorted(s.nodes), "edges": [list(e) for e in sorted(s.edges)]}


def selector_from_dict(doc: Any) -> Selector:
    doc = _require(doc, ("nodes", "edges"), "selector")
    return Selector(_strings(doc["nodes"], "selector nodes"), _edge_list(doc["edges"], "selector edges"))


def system_to_dict(system: ReactionSystem) -> dict:
    return {
        "background": graph_to_dict(system.background),
        "reactions": [
            {
                "name": b.name,
                "reactants": graph_to_dict(b.reactants),
                "inhibitor": selector_to_dict(b.inhibitor),
                "products": graph_to_dict(b.products),
            }
            for b in system.reactions
        ],
    }


def system_from_dict(doc: Any) -> ReactionSystem:
    doc = _require(doc, ("background", "reactions"), "reaction system")
    if not isinstance(doc["reactions"], list):
        raise FormatError("reactions must be a list")
    reactions = []
    for r in doc["reactions"]:
        r = _require(r, ("name", "reactants", "inhibitor", "products"), "reaction")
        reactions.append(
            Reaction(
                reactants=graph_from_dict(r["reactants"]),
                inhibitor=selector_from_dict(r["inhibitor"]),
                products=graph_from_dict(r["products"]),
                name=_string(r["name"], "reaction name"),
            )
        )
    return ReactionSystem(graph_from_dict(doc["background"]), reactions)


def environment_to_dict(env: Environment) -> dict:
    doc = {
        "graph": graph_to_dict(env.graph),
        "enzymes": sorted(env.enzymes),
        "enabler": sorted(env.enabler),
        "inhibitor_alphabet": sorted(env.inhibitors),
    }
    if env.roles is not None:
        doc["roles"] = dict(sorted(env.roles.items()))
    return doc


def environment_from_dict(doc: Any) -> Environment:
    doc = _require(doc, ("graph", "enzymes", "enabler", "inhibitor_alphabet"), "environment", optional=("roles",))
    roles = doc.get("roles")
    if roles is not None and not (
        isinstance(roles, dict) and all(isinstance(k, str) and isinstance(v, str) for k, v in roles.items())
    ):
        raise FormatError("roles must map symbols to role names")
    return Environment(
        graph=graph_from_dict(doc["graph"]),
        enzymes=_strings(doc["enzymes"], "enzymes"),
        enabler=_strings(doc["enabler"], "enabler"),
        inhibitors=_strings(doc["inhibitor_alphabet"], "inhibitor_alphabet"),
        roles=roles,
    )


Serializable = Union[Automaton, LabelledGraph, Selector, ReactionSystem, Environment]

_WRITERS = [
    (Automaton, automaton_to_dict),
    (LabelledGraph, graph_to_dict),
    (Selector, selector_to_dict),
    (ReactionSystem, system_to_dict),
    (Environment, environment_to_dict),
]


def to_dict(obj: Serializable) -> dict:
    for cls, writer in _WRITERS:
        if isinstance(obj, cls):
            return writer(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    if not isinstance(obj, (dict, list)):
        obj = to_dict(obj)
    return json.dumps(obj, indent=2, sort_keys=True)


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc

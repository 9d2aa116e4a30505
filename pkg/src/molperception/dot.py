"""Graphviz DOT rendering.

The body holds exactly one line per node and one per edge, both in sorted
order, so equal inputs always give byte-identical text.
"""

from __future__ import annotations

from typing import Union

from .automata import Automaton
from .lgraph import LabelledGraph


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', '\\"'))


def automaton_dot(a: Automaton, name: str = "automaton") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for q in sorted(a.states):
        attrs = ["shape=" + ("diamond" if q in a.perceiving else "circle")]
        if q in a.finals:
            attrs.append("peripheries=2")
        if q == a.initial:
            attrs.append("style=bold")
        lines.append(f"  {_quote(q)} [{', '.join(attrs)}];")
    for src, x, dst in sorted(a.edges):
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(x)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: LabelledGraph, name: str = "graph") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for v in g.sorted_nodes():
        lines.append(f"  {_quote(v)};")
    for src, dst, label in g.sorted_edges():
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj: Union[Automaton, LabelledGraph]) -> str:
    if isinstance(obj, Automaton):
        return automaton_dot(obj)
    if isinstance(obj, LabelledGraph):
        return graph_dot(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")

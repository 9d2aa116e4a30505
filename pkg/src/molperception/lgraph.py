"""Directed edge-labelled graphs, selectors and extractions.

A graph is a triple ``(nodes, labels, edges)`` where every edge is a
``(source, target, label)`` triple. Only edges carry labels; node ids are
opaque strings. Subgraphs are taken literally (same node ids, same label
alphabet), never up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

from .errors import AlphabetError, DomainError

Edge = Tuple[str, str, str]
Pair = Tuple[frozenset, frozenset]

EMPTY_PAIR: Pair = (frozenset(), frozenset())


def _edges(edges: Iterable) -> frozenset:
    out = set()
    for e in edges:
        e = tuple(e)
        if len(e) != 3:
            raise DomainError(f"edge {e!r} is not a (source, target, label) triple")
        out.add(e)
    return frozenset(out)


@dataclass(frozen=True)
class LabelledGraph:
    nodes: frozenset = field(default_factory=frozenset)
    labels: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "edges", _edges(self.edges))
        for src, dst, label in self.edges:
            if src not in self.nodes or dst not in self.nodes:
                raise DomainError(f"edge ({src}, {dst}, {label}) has an endpoint outside the node set")
            if label not in self.labels:
                raise AlphabetError(f"edge ({src}, {dst}, {label}) carries an unknown label")

    @classmethod
    def empty(cls, labels: Iterable[str] = ()) -> LabelledGraph:
        return cls(frozenset(), frozenset(labels), frozenset())

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def sorted_nodes(self) -> list:
        return sorted(self.nodes)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def subgraph(self, nodes: Iterable[str] = (), edges: Iterable = ()) -> LabelledGraph:
        """Subgraph over this graph's alphabet; endpoints of `edges` are added to the nodes."""
        edges = _edges(edges)
        nodes = set(nodes)
        for src, dst, _ in edges:
            nodes.update((src, dst))
        h = LabelledGraph(nodes, self.labels, edges)
        if not is_subgraph(h, self):
            raise DomainError("requested nodes or edges are not part of the graph")
        return h

    def __repr__(self):
        return (
            f"LabelledGraph(nodes={self.sorted_nodes()}, labels={sorted(self.labels)}, "
            f"edges={self.sorted_edges()})"
        )


@dataclass(frozen=True)
class Selector:
    """A (node set, edge set) pair chosen from some graph."""

    nodes: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", _edges(self.edges))

    def __iter__(self):
        yield self.nodes
        yield self.edges

    @property
    def is_empty(self) -> bool:
        return not self.nodes and not self.edges

    def bind(self, g: LabelledGraph) -> Selector:
        """Return self after checking it selects only items of `g`."""
        if not self.nodes <= g.nodes:
            raise DomainError(f"selector nodes {sorted(self.nodes - g.nodes)} are not in the graph")
        if not self.edges <= g.edges:
            raise DomainError(f"selector edges {sorted(self.edges - g.edges)} are not in the graph")
        return self

    def is_selector_of(self, g: LabelledGraph) -> bool:
        return self.nodes <= g.nodes and self.edges <= g.edges


@dataclass(frozen=True)
class Extraction:
    """The (nodes, edges) projection of a graph, dropping its labels."""

    nodes: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", _edges(self.edges))

    def __iter__(self):
        yield self.nodes
        yield self.edges

    def rebuild(self, labels: Iterable[str]) -> LabelledGraph:
        return LabelledGraph(self.nodes, labels, self.edges)


PairLike = Union[Selector, Extraction, Pair]


def is_subgraph(h: LabelledGraph, g: LabelledGraph) -> bool:
    """True when `h` has `g`'s alphabet and its nodes and edges are contained in `g`'s."""
    return h.labels == g.labels and h.nodes <= g.nodes and h.edges <= g.edges


def extraction(h: LabelledGraph) -> Extraction:
    return Extraction(h.nodes, h.edges)


def pair_intersect(a: PairLike, b: PairLike) -> Pair:
    xa, ya = a
    xb, yb = b
    return (frozenset(xa) & frozenset(xb), frozenset(ya) & frozenset(yb))


def pair_is_empty(p: PairLike) -> bool:
    x, y = p
    return not x and not y


def graph_union(h1: LabelledGraph, h2: LabelledGraph) -> LabelledGraph:
    if h1.labels != h2.labels:
        raise AlphabetError(
            f"cannot unite graphs over different alphabets {sorted(h1.labels)} and {sorted(h2.labels)}"
        )
    return LabelledGraph(h1.nodes | h2.nodes, h1.labels, h1.edges | h2.edges)

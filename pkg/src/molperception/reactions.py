"""Graph-based reactions and reaction systems.

A reaction ``b = (R, I, P)`` over a background graph ``B`` is enabled by a
state ``T`` (a subgraph of ``B``) when ``R`` is a subgraph of ``T`` and the
inhibitor selects nothing that is present in ``T``. Its result is ``P`` when
enabled and the empty graph over ``B``'s alphabet otherwise. The result of a
system is the union of the results of all its reactions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .lgraph import (
    LabelledGraph,
    Selector,
    extraction,
    graph_union,
    is_subgraph,
    pair_intersect,
    pair_is_empty,
)


@dataclass(frozen=True)
class Reaction:
    reactants: LabelledGraph
    inhibitor: Selector
    products: LabelledGraph
    name: str = "b"


@dataclass(frozen=True)
class ReactionSystem:
    background: LabelledGraph
    reactions: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "reactions", tuple(self.reactions))
        if self.background.is_empty:
            raise DomainError("the background graph must be non-empty")
        seen = set()
        for b in self.reactions:
            problems = validate_reaction(b, self.background)
            if problems:
                raise DomainError(f"reaction {b.name!r} is invalid: {'; '.join(problems)}")
            if b.name in seen:
                raise DomainError(f"duplicate reaction name {b.name!r}")
            seen.add(b.name)

    def reaction(self, name: str) -> Reaction:
        for b in self.reactions:
            if b.name == name:
                return b
        raise DomainError(f"no reaction named {name!r}")


def validate_reaction(b: Reaction, background: LabelledGraph) -> list:
    """List every way `b` fails to be a reaction over `background`; empty when valid."""
    problems = []
    if b.reactants.is_empty:
        problems.append("reactants empty")
    if b.products.is_empty:
        problems.append("products empty")
    if not is_subgraph(b.reactants, background):
        problems.append("reactants not a subgraph of background")
    if not is_subgraph(b.products, background):
        problems.append("products not a subgraph of background")
    if not b.inhibitor.is_selector_of(background):
        problems.append("inhibitor not a selector of background")
    if not pair_is_empty(pair_intersect(b.inhibitor, extraction(b.reactants))):
        problems.append("inhibitor overlaps reactants")
    return problems


def check_state(t: LabelledGraph, background: LabelledGraph, what: str = "state") -> None:
    if not is_subgraph(t, background):
        raise DomainError(f"{what} is not a subgraph of the background graph")


def _check_labels(b: Reaction, t: LabelledGraph) -> None:
    if t.labels != b.reactants.labels:
        raise DomainError("state and reaction are over different label alphabets")


def enabled(b: Reaction, t: LabelledGraph, background: Optional[LabelledGraph] = None) -> bool:
    if background is not None:
        check_state(t, background)
    _check_labels(b, t)
    return is_subgraph(b.reactants, t) and pair_is_empty(pair_intersect(b.inhibitor, extraction(t)))


def result(b: Reaction, t: LabelledGraph, background: Optional[LabelledGraph] = None) -> LabelledGraph:
    if enabled(b, t, background):
        return b.products
    return LabelledGraph.empty(t.labels)


def union_all(graphs: Iterable[LabelledGraph], labels: Iterable[str]) -> LabelledGraph:
    out = LabelledGraph.empty(labels)
    for g in graphs:
        out = graph_union(out, g)
    return out


def result_set(system: ReactionSystem, t: LabelledGraph) -> LabelledGraph:
    check_state(t, system.background)
    return union_all((result(b, t) for b in system.reactions), system.background.labels)


def run(
    system: ReactionSystem,
    start: LabelledGraph,
    steps: int,
    contexts: Optional[Sequence[LabelledGraph]] = None,
) -> list:
    """Iterate the result function, adding context ``contexts[i]`` after step ``i``.

    Returns ``steps + 1`` states, the first being `start`. A missing context
    (or a shorter context sequence) contributes nothing.
    """
    if steps < 0:
        raise DomainError("steps must be non-negative")
    check_state(start, system.background, "initial state")
    contexts = list(contexts or ())
    if len(contexts) > steps:
        raise DomainError(f"{len(contexts)} contexts given for {steps} steps")
    for i, c in enumerate(contexts):
        check_state(c, system.background, f"context {i}")
    states = [start]
    for i in range(steps):
        nxt = result_set(system, states[-1])
        if i < len(contexts):
            nxt = graph_union(nxt, contexts[i])
        states.append(nxt)
    return states

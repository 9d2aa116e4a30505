"""Perception-enabled reactions and environment-driven inhibition.

An enzyme only catalyses when it *perceives* its cognate molecules. On a
background graph this is expressed with a perception selector: all edges
labelled with a reaction-enabler symbol, plus their endpoints. A reaction is
perception-enabled by a state ``T`` when its reactants and products are
present in ``T`` and its reactants touch the perception selector. The
inhibitor must also select nothing present in ``T``.

Environments describe concrete molecule layouts and are compiled into a
reaction system with one reaction per enzyme instance.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .automata import Automaton
from .catalog import COENZYME, COENZYME_RESULT, PRODUCT, known_roles, perception
from .equivalence import simulation_embedding
from .errors import AlphabetError, DomainError, NotAPerceptionReactionError
from .lgraph import (
    LabelledGraph,
    Selector,
    extraction,
    is_subgraph,
    pair_intersect,
    pair_is_empty,
)
from .reactions import Reaction, ReactionSystem, check_state, union_all


@dataclass(frozen=True)
class Environment:
    """Molecule instances around one or more enzymes.

    `graph` edges point from a perceiver to the molecule it perceives;
    `enabler` lists the cognate symbols the enzyme must perceive and
    `inhibitors` the labels of inhibiting contacts. `roles` optionally pins
    which automaton symbol plays substrate/coenzyme/product/result.
    """

    graph: LabelledGraph
    enzymes: frozenset
    enabler: frozenset
    inhibitors: frozenset
    roles: Optional[Mapping] = field(default=None, compare=True)

    def __post_init__(self):
        for name in ("enzymes", "enabler", "inhibitors"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.roles is not None:
            object.__setattr__(self, "roles", dict(self.roles))
        if not self.enzymes <= self.graph.nodes:
            raise DomainError(f"enzymes {sorted(self.enzymes - self.graph.nodes)} are not graph nodes")
        if self.enabler & self.inhibitors:
            raise AlphabetError("enabler and inhibitor symbols must be disjoint")
        for src, dst, label in self.graph.edges:
            if (label in self.enabler or label in self.inhibitors) and src not in self.enzymes:
                raise DomainError(f"edge ({src}, {dst}, {label}) must start at an enzyme")

    def __hash__(self):
        roles = None if self.roles is None else frozenset(self.roles.items())
        return hash((self.graph, self.enzymes, self.enabler, self.inhibitors, roles))


def validate_enabler(a: Automaton, enabler: Iterable[str], product: str) -> None:
    enabler = frozenset(enabler)
    if not enabler <= a.alphabet:
        raise AlphabetError(f"enabler symbols {sorted(enabler - a.alphabet)} are not in the alphabet")
    if product in enabler:
        raise DomainError(f"the product symbol {product!r} cannot enable the reaction")


def perception_selector(background: LabelledGraph, enabler: Iterable[str]) -> Selector:
    enabler = frozenset(enabler)
    if not enabler <= background.labels:
        raise AlphabetError(f"enabler symbols {sorted(enabler - background.labels)} are not graph labels")
    edges = {e for e in background.edges if e[2] in enabler}
    nodes = {v for src, dst, _ in edges for v in (src, dst)}
    return Selector(nodes, edges)


def perception_enabled(
    b: Reaction,
    t: LabelledGraph,
    selector: Selector,
    strict: bool = True,
    background: Optional[LabelledGraph] = None,
) -> bool:
    """Whether `t` perception-enables `b`.

    With ``strict`` (the default) the products must be present in `t` as
    well as the reactants; ``strict=False`` only asks for the reactants,
    like plain enablement.
    """
    if background is not None:
        check_state(t, background)
        selector.bind(background)
    if t.labels != b.reactants.labels:
        raise DomainError("state and reaction are over different label alphabets")
    present = is_subgraph(b.reactants, t) and (not strict or is_subgraph(b.products, t))
    perceives = not pair_is_empty(pair_intersect(extraction(b.reactants), selector))
    blocked = not pair_is_empty(pair_intersect(extraction(t), b.inhibitor))
    return present and perceives and not blocked


def result_by_perception(
    b: Reaction,
    t: LabelledGraph,
    selector: Selector,
    strict: bool = True,
    background: Optional[LabelledGraph] = None,
) -> LabelledGraph:
    if perception_enabled(b, t, selector, strict, background):
        return b.products
    return LabelledGraph.empty(t.labels)


def resp_set(system: ReactionSystem, t: LabelledGraph, enabler: Iterable[str], strict: bool = True) -> LabelledGraph:
    check_state(t, system.background)
    selector = perception_selector(system.background, enabler)
    return union_all(
        (result_by_perception(b, t, selector, strict) for b in system.reactions),
        system.background.labels,
    )


def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def reaction_roles(aut: Automaton, roles: Optional[Mapping] = None) -> dict:
    """Map each role (``s``, ``c``, ``p``, ``r``) to the automaton symbol playing it.

    Roles come from `roles` (automaton symbol -> role), the catalog, or
    failing those from any embedding into the perception automaton.
    """
    if roles is None:
        roles = known_roles(aut)
    emb = simulation_embedding(aut, perception(), symbol_map=roles)
    if emb is None:
        raise NotAPerceptionReactionError("automaton does not embed into the perception-based reaction automaton")
    return {role: x for x, role in emb.symbol_map.items()}


def compile_environment(aut: Automaton, env: Environment) -> ReactionSystem:
    """Reaction system with one reaction per enzyme of `env`.

    For enzyme ``e`` the reactants are ``e`` with its first perceived edge
    (in sorted order) for each enabler symbol. The products are fresh edges
    from ``e`` labelled with the product symbol, plus the coenzyme result
    when the coenzyme is an enabler. The inhibitor selects every edge
    incident to ``e`` whose label is an inhibitor symbol.
    """
    by_role = reaction_roles(aut, env.roles)
    product = by_role[PRODUCT]
    validate_enabler(aut, env.enabler, product)
    if env.inhibitors & aut.alphabet:
        raise AlphabetError(f"inhibitor symbols {sorted(env.inhibitors & aut.alphabet)} clash with the alphabet")
    labels = aut.alphabet | env.inhibitors
    if not env.graph.labels <= labels:
        raise AlphabetError(f"graph labels {sorted(env.graph.labels - labels)} are neither symbols nor inhibitors")

    product_symbols = [product]
    if by_role[COENZYME] in env.enabler:
        product_symbols.append(by_role[COENZYME_RESULT])

    nodes = set(env.graph.nodes)
    edges = set(env.graph.edges)
    parts = []
    for e in sorted(env.enzymes):
        own = sorted(edge for edge in env.graph.edges if edge[0] == e)
        r_edges = []
        for x in sorted(env.enabler):
            perceived = [edge for edge in own if edge[2] == x]
            if perceived:
                r_edges.append(perceived[0])
        if not r_edges:
            warnings.warn(f"enzyme {e!r} perceives no enabler molecule and can never react", stacklevel=2)
        p_edges = []
        for y in product_symbols:
            target = _fresh(f"{e}.{y}", nodes)
            nodes.add(target)
            p_edges.append((e, target, y))
        edges.update(p_edges)
        inhibitor = [edge for edge in env.graph.edges if e in edge[:2] and edge[2] in env.inhibitors]
        parts.append((e, r_edges, p_edges, inhibitor))

    background = LabelledGraph(nodes, labels, edges)
    reactions = [
        Reaction(
            reactants=background.subgraph({e}, r_edges),
            inhibitor=Selector((), inhibitor),
            products=background.subgraph({e}, p_edges),
            name=e,
        )
        for e, r_edges, p_edges, inhibitor in parts
    ]
    return ReactionSystem(background, reactions)


def is_inhibited(aut: Automaton, env: Environment, t: LabelledGraph) -> bool:
    """True when every compiled reaction has an inhibitor present in `t` (and there is one)."""
    system = compile_environment(aut, env)
    check_state(t, system.background)
    u = extraction(t)
    return bool(system.reactions) and all(
        not pair_is_empty(pair_intersect(u, b.inhibitor)) for b in system.reactions
    )

import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from molperception.automata import EPSILON, Automaton
from molperception.catalog import generic, perception, pfk
from molperception.lgraph import LabelledGraph

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture
def GENERIC():
    return generic()


@pytest.fixture
def PERCEPTION():
    return perception()


@pytest.fixture
def PFK():
    return pfk()


@st.composite
def automata(draw, max_states=5, symbols="abcd", epsilon=True, partition=False):
    n = draw(st.integers(1, max_states))
    states = [f"q{i}" for i in range(n)]
    k = draw(st.integers(1, len(symbols)))
    alphabet = list(symbols[:k])
    inputs = alphabet + ([EPSILON] if epsilon else [])
    triples = [(s, x, t) for s in states for x in inputs for t in states]
    edges = draw(st.sets(st.sampled_from(triples), max_size=3 * n))
    finals = draw(st.sets(st.sampled_from(states)))
    stable = perceiving = ()
    if partition:
        perceiving = draw(st.sets(st.sampled_from(states)))
        stable = set(states) - perceiving
    return Automaton(states, alphabet, edges, "q0", finals, stable, perceiving)


@st.composite
def dfas(draw, max_states=5, symbols="ab"):
    n = draw(st.integers(1, max_states))
    states = [f"q{i}" for i in range(n)]
    edges = set()
    for s in states:
        for x in symbols:
            t = draw(st.one_of(st.none(), st.sampled_from(states)))
            if t is not None:
                edges.add((s, x, t))
    finals = draw(st.sets(st.sampled_from(states)))
    return Automaton(states, symbols, edges, "q0", finals)


@st.composite
def graphs(draw, max_nodes=5, labels="xyz"):
    n = draw(st.integers(0, max_nodes))
    nodes = [f"v{i}" for i in range(n)]
    edges = set()
    if nodes:
        triples = [(s, t, x) for s in nodes for t in nodes for x in labels]
        edges = draw(st.sets(st.sampled_from(triples), max_size=2 * n))
    return LabelledGraph(nodes, labels, edges)


@st.composite
def subgraphs(draw, g: LabelledGraph):
    edges = draw(st.sets(st.sampled_from(sorted(g.edges)))) if g.edges else set()
    nodes = draw(st.sets(st.sampled_from(sorted(g.nodes)))) if g.nodes else set()
    return g.subgraph(nodes, edges)


def random_subgraph(rng: random.Random, g: LabelledGraph, p: float = 0.5) -> LabelledGraph:
    edges = [e for e in g.sorted_edges() if rng.random() < p]
    nodes = [v for v in g.sorted_nodes() if rng.random() < p]
    return g.subgraph(nodes, edges)


def random_graph(rng: random.Random, max_nodes=6, labels=("x", "y", "z")) -> LabelledGraph:
    nodes = [f"v{i}" for i in range(rng.randint(1, max_nodes))]
    edges = {
        (rng.choice(nodes), rng.choice(nodes), rng.choice(labels))
        for _ in range(rng.randint(0, 2 * len(nodes)))
    }
    return LabelledGraph(nodes, labels, edges)


def random_automaton(rng: random.Random, max_states=6, symbols="abcd") -> Automaton:
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    alphabet = list(symbols[: rng.randint(1, len(symbols))])
    inputs = alphabet + [EPSILON]
    edges = {(rng.choice(states), rng.choice(inputs), rng.choice(states)) for _ in range(rng.randint(0, 3 * n))}
    finals = {q for q in states if rng.random() < 0.4}
    stable = perceiving = ()
    if rng.random() < 0.5:
        perceiving = {q for q in states if rng.random() < 0.4}
        stable = set(states) - perceiving
    return Automaton(states, alphabet, edges, "q0", finals, stable, perceiving)


def compare_languages(a: Automaton, b: Automaton, max_length: int):
    """Depth-first walk over all words up to `max_length`, stepping both automata per symbol.

    A subtree is skipped only when both reachable sets are empty, since every
    extension of a stranded prefix is rejected by both. Returns
    (mismatching words, number of words covered).
    """
    from molperception.automata import step

    symbols = sorted(a.alphabet)
    mismatches = []
    covered = 0
    stack = [((), a._closures[a.initial], b._closures[b.initial])]
    while stack:
        word, sa, sb = stack.pop()
        if not sa and not sb:
            remaining = max_length - len(word)
            covered += sum(len(symbols) ** k for k in range(remaining + 1))
            continue
        covered += 1
        if bool(sa & a.finals) != bool(sb & b.finals):
            mismatches.append(word)
        if len(word) < max_length:
            for x in symbols:
                stack.append((word + (x,), step(a, sa, x), step(b, sb, x)))
    return mismatches, covered

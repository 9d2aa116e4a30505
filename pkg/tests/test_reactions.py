import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from molperception.errors import DomainError
from molperception.lgraph import LabelledGraph, Selector, graph_union, is_subgraph
from molperception.reactions import (
    Reaction,
    ReactionSystem,
    enabled,
    result,
    result_set,
    run,
    validate_reaction,
)

from .conftest import random_graph, random_subgraph

LABELS = {"x", "y", "i"}


@pytest.fixture
def B():
    # three molecules a, b, c; a inhibitor contact from c to a
    return LabelledGraph(
        {"a", "b", "c"},
        LABELS,
        {("a", "b", "x"), ("b", "c", "y"), ("c", "a", "i"), ("a", "a", "x")},
    )


def reaction(B, r_nodes=(), r_edges=(), p_nodes=(), p_edges=(), i_nodes=(), i_edges=(), name="b"):
    return Reaction(B.subgraph(r_nodes, r_edges), Selector(i_nodes, i_edges), B.subgraph(p_nodes, p_edges), name)


class TestValidate:
    def test_minimal_reaction_ok(self, B):
        assert validate_reaction(reaction(B, {"a"}, p_nodes={"a"}), B) == []

    def test_empty_reactants(self, B):
        b = Reaction(LabelledGraph.empty(LABELS), Selector(), B.subgraph({"a"}), "b")
        assert "reactants empty" in validate_reaction(b, B)

    def test_empty_products(self, B):
        b = Reaction(B.subgraph({"a"}), Selector(), LabelledGraph.empty(LABELS), "b")
        assert "products empty" in validate_reaction(b, B)

    def test_inhibitor_overlaps_reactants(self, B):
        b = reaction(B, {"a"}, p_nodes={"b"}, i_nodes={"a"})
        assert "inhibitor overlaps reactants" in validate_reaction(b, B)

    def test_inhibitor_edge_overlaps_reactants(self, B):
        b = reaction(B, r_edges={("a", "b", "x")}, p_nodes={"b"}, i_edges={("a", "b", "x")})
        assert "inhibitor overlaps reactants" in validate_reaction(b, B)

    def test_outside_background(self, B):
        other = LabelledGraph({"z"}, LABELS, ())
        b = Reaction(other, Selector({"q"}, ()), other, "b")
        problems = validate_reaction(b, B)
        assert "reactants not a subgraph of background" in problems
        assert "products not a subgraph of background" in problems
        assert "inhibitor not a selector of background" in problems

    def test_system_rejects_invalid_reaction(self, B):
        with pytest.raises(DomainError):
            ReactionSystem(B, [reaction(B, {"a"}, p_nodes={"b"}, i_nodes={"a"})])

    def test_system_rejects_empty_background(self):
        with pytest.raises(DomainError):
            ReactionSystem(LabelledGraph.empty(LABELS), [])

    def test_system_rejects_duplicate_names(self, B):
        b = reaction(B, {"a"}, p_nodes={"a"})
        with pytest.raises(DomainError):
            ReactionSystem(B, [b, b])


class TestEnabled:
    def test_state_equal_to_reactants(self, B):
        b = reaction(B, r_edges={("a", "b", "x")}, p_nodes={"c"})
        assert enabled(b, b.reactants, B)

    def test_missing_edge(self, B):
        b = reaction(B, r_edges={("a", "b", "x"), ("b", "c", "y")}, p_nodes={"c"})
        t = B.subgraph(edges={("a", "b", "x")}, nodes={"c"})
        assert not enabled(b, t, B)

    def test_inhibitor_present(self, B):
        b = reaction(B, r_edges={("a", "b", "x")}, p_nodes={"c"}, i_edges={("c", "a", "i")})
        assert enabled(b, B.subgraph(edges={("a", "b", "x")}), B)
        assert not enabled(b, B.subgraph(edges={("a", "b", "x"), ("c", "a", "i")}), B)

    def test_inhibitor_node_present(self, B):
        b = reaction(B, {"a"}, p_nodes={"a"}, i_nodes={"c"})
        assert not enabled(b, B.subgraph({"a", "c"}), B)

    def test_state_outside_background(self, B):
        b = reaction(B, {"a"}, p_nodes={"a"})
        with pytest.raises(DomainError):
            enabled(b, LabelledGraph({"a", "z"}, LABELS, ()), B)

    def test_alphabet_mismatch(self, B):
        b = reaction(B, {"a"}, p_nodes={"a"})
        with pytest.raises(DomainError):
            enabled(b, LabelledGraph({"a"}, {"x"}, ()))

    def test_removing_edges_keeps_disabled(self, B):
        rng = random.Random(5)
        b = reaction(B, r_edges={("a", "b", "x"), ("b", "c", "y")}, p_nodes={"a"})
        for _ in range(200):
            t = random_subgraph(rng, B)
            if not enabled(b, t, B) and not is_subgraph(b.reactants, t):
                smaller = random_subgraph(rng, t)
                assert not enabled(b, smaller, B)


class TestResult:
    def test_enabled(self, B):
        b = reaction(B, {"a"}, p_edges={("b", "c", "y")})
        assert result(b, B.subgraph({"a"}), B) == b.products

    def test_disabled(self, B):
        b = reaction(B, {"b"}, p_edges={("b", "c", "y")})
        assert result(b, B.subgraph({"a"}), B) == LabelledGraph.empty(LABELS)

    def test_whole_background(self, B):
        b = reaction(B, r_edges={("a", "b", "x")}, p_nodes={"c"})
        assert result(b, B, B) == b.products

    def test_all_or_nothing(self):
        rng = random.Random(11)
        for _ in range(300):
            g = random_graph(rng)
            r = random_subgraph(rng, g, 0.3)
            p = random_subgraph(rng, g, 0.5)
            if r.is_empty or p.is_empty:
                continue
            inh = random_subgraph(rng, g, 0.2)
            b = Reaction(r, Selector(inh.nodes - r.nodes, inh.edges - r.edges), p)
            res = result(b, random_subgraph(rng, g), g)
            assert res == p or res.is_empty


class TestResultSet:
    def test_no_reactions(self, B):
        assert result_set(ReactionSystem(B, []), B) == LabelledGraph.empty(LABELS)

    def test_single_reaction(self, B):
        b = reaction(B, {"a"}, p_edges={("b", "c", "y")})
        assert result_set(ReactionSystem(B, [b]), B.subgraph({"a"})) == b.products

    def test_union_of_two(self, B):
        b1 = reaction(B, {"a"}, p_nodes={"b"}, name="b1")
        b2 = reaction(B, {"a"}, p_edges={("c", "a", "i")}, name="b2")
        expected = LabelledGraph({"a", "b", "c"}, LABELS, {("c", "a", "i")})
        assert result_set(ReactionSystem(B, [b1, b2]), B.subgraph({"a"})) == expected

    def test_state_outside_background(self, B):
        with pytest.raises(DomainError):
            result_set(ReactionSystem(B, []), LabelledGraph({"q"}, LABELS, ()))

    def test_properties_on_random_systems(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng)
            reactions = []
            for k in range(rng.randint(0, 4)):
                r = random_subgraph(rng, g, 0.3)
                p = random_subgraph(rng, g, 0.5)
                if r.is_empty or p.is_empty:
                    continue
                inh = random_subgraph(rng, g, 0.2)
                reactions.append(Reaction(r, Selector(inh.nodes - r.nodes, inh.edges - r.edges), p, f"b{k}"))
            t = random_subgraph(rng, g)
            whole = result_set(ReactionSystem(g, reactions), t)
            assert is_subgraph(whole, g)
            cut = rng.randint(0, len(reactions))
            left = result_set(ReactionSystem(g, reactions[:cut]), t)
            right = result_set(ReactionSystem(g, reactions[cut:]), t)
            assert whole == graph_union(left, right)


class TestRun:
    def test_zero_steps(self, B):
        t0 = B.subgraph({"a"})
        assert run(ReactionSystem(B, []), t0, 0) == [t0]

    def test_fixpoint(self, B):
        t0 = B.subgraph(edges={("a", "b", "x")})
        b = Reaction(t0, Selector(), t0)
        assert run(ReactionSystem(B, [b]), t0, 3) == [t0] * 4

    def test_nothing_enabled_empties(self, B):
        b = reaction(B, {"c"}, p_nodes={"c"})
        t0 = B.subgraph({"a"})
        empty = LabelledGraph.empty(LABELS)
        assert run(ReactionSystem(B, [b]), t0, 3) == [t0, empty, empty, empty]

    def test_contexts_are_added(self, B):
        b = reaction(B, {"c"}, p_nodes={"a"})
        t0 = B.subgraph({"b"})
        ctx = [B.subgraph({"c"}), LabelledGraph.empty(LABELS)]
        states = run(ReactionSystem(B, [b]), t0, 3, ctx)
        assert states[1] == B.subgraph({"c"})
        assert states[2] == B.subgraph({"a"})
        assert states[3] == LabelledGraph.empty(LABELS)

    def test_context_outside_background(self, B):
        with pytest.raises(DomainError):
            run(ReactionSystem(B, []), B.subgraph({"a"}), 1, [LabelledGraph({"z"}, LABELS, ())])

    def test_too_many_contexts(self, B):
        with pytest.raises(DomainError):
            run(ReactionSystem(B, []), B.subgraph({"a"}), 1, [B.subgraph(), B.subgraph()])

    @given(st.integers(0, 5))
    def test_length(self, steps):
        g = LabelledGraph({"a"}, LABELS, ())
        assert len(run(ReactionSystem(g, []), g, steps)) == steps + 1

import math
import random

import pytest
from hypothesis import given, settings

from artinsplit.corpus import complete_graph, discrete_graph, path_graph
from artinsplit.errors import GraphInputError
from artinsplit.graph import (PresentationGraph, connected_components, diameter,
                              induced_subgraph, joined_by_odd_path, link, neighbourhood,
                              odd_components, perp)
from artinsplit.oracle import brute_force_odd_join

from helpers import graphs, graphs_with_subsets, random_graph, random_subset


def test_graph_rejects_bad_input():
    with pytest.raises(GraphInputError):
        PresentationGraph("ab", [("a", "a", 2)])
    with pytest.raises(GraphInputError):
        PresentationGraph("ab", [("a", "b", 2), ("b", "a", 3)])
    with pytest.raises(GraphInputError, match="label must be ≥ 2"):
        PresentationGraph("ab", [("a", "b", 1)])
    with pytest.raises(GraphInputError):
        PresentationGraph("ab", [("a", "c", 2)])
    with pytest.raises(GraphInputError):
        PresentationGraph(["a", "a"])
    with pytest.raises(GraphInputError):
        PresentationGraph("ab", [("a", "b", 10**6 + 1)])
    PresentationGraph("ab", [("a", "b", 10**6)])


def test_vertex_names_are_case_sensitive():
    g = PresentationGraph(["a", "A"], [("a", "A", 3)])
    assert g.vertices == ("A", "a")
    assert g.label("A", "a") == 3


class TestLink:
    def test_triangle(self):
        assert link(complete_graph(3, [3, 4, 5]), {"a"}) == {"b", "c"}

    def test_path_ends(self):
        assert link(path_graph(3), {"a", "c"}) == {"b"}

    def test_single_vertex(self):
        assert link(complete_graph(1), {"a"}) == frozenset()

    def test_empty_set_gives_everything(self):
        assert link(path_graph(3), set()) == {"a", "b", "c"}

    def test_unknown_vertex(self):
        with pytest.raises(GraphInputError):
            link(path_graph(3), {"z"})


class TestNeighbourhood:
    def test_example_path(self, ex34):
        assert neighbourhood(ex34, {"a"}) == {"a", "b"}

    def test_empty(self, ex34):
        assert neighbourhood(ex34, set()) == frozenset()

    def test_union_graph(self, fig3):
        assert neighbourhood(fig3, {"a", "e"}) == {"a", "b", "e", "f"}

    def test_unknown_vertex(self, ex34):
        with pytest.raises(GraphInputError):
            neighbourhood(ex34, {"q"})


class TestPerp:
    def test_empty(self, fig3):
        assert perp(fig3, set()) == set(fig3.vertices)

    def test_commuting_pair(self):
        assert perp(complete_graph(2, 2), {"a"}) == {"b"}

    def test_braid_pair(self, k2_3):
        assert perp(k2_3, {"a"}) == frozenset()


class TestInducedSubgraph:
    def test_everything(self, fig3):
        assert induced_subgraph(fig3, fig3.vertices) == fig3

    def test_nothing(self, fig3):
        h = induced_subgraph(fig3, set())
        assert h.vertices == () and h.edges() == []

    def test_square_in_union_graph(self, fig3):
        h = induced_subgraph(fig3, {"b", "c", "f", "g"})
        assert h.edges() == [("b", "c", 4), ("b", "f", 2), ("c", "g", 4), ("f", "g", 4)]


class TestOddComponents:
    def test_all_even(self):
        part = odd_components(complete_graph(4, 4))
        assert all(len(c) == 1 for c in part)

    def test_path(self, ex34):
        assert set(odd_components(ex34)) == {frozenset("a"), frozenset("bc")}

    def test_union_graph(self, fig3):
        assert set(odd_components(fig3)) == {frozenset("cdgh"), frozenset("a"), frozenset("b"),
                                             frozenset("e"), frozenset("f")}


class TestJoinedByOddPath:
    def test_overlap(self, fig3):
        assert joined_by_odd_path(fig3, {"a", "c"}, {"c"}) == ("c", "c")

    def test_example_sets(self, ex34):
        assert joined_by_odd_path(ex34, {"a", "b"}, {"b", "c"}) == ("b", "b")

    def test_union_graph_neighbourhoods(self, fig3):
        assert joined_by_odd_path(fig3, set("abef"), set("cdgh")) is None

    def test_genuine_path(self, fig3):
        assert joined_by_odd_path(fig3, {"c"}, {"h"}) == ("c", "h")


class TestConnectivity:
    def test_complete(self):
        for n in range(2, 6):
            assert diameter(complete_graph(n)) == 1

    def test_path(self):
        assert diameter(path_graph(4)) == 3

    def test_discrete(self):
        assert diameter(discrete_graph(2)) == math.inf
        assert len(connected_components(discrete_graph(2))) == 2

    def test_empty_graph(self):
        assert diameter(PresentationGraph([])) == math.inf

    def test_infinite_is_at_least_three(self):
        assert diameter(discrete_graph(2)) >= 3


# -- properties ---------------------------------------------------------------


@given(graphs_with_subsets(count=1))
def test_neighbourhood_contains_set_and_is_union(case):
    g, A = case
    N = neighbourhood(g, A)
    assert A <= N
    assert N == frozenset().union(*(neighbourhood(g, {v}) for v in A))


@given(graphs_with_subsets(count=1))
def test_link_disjoint_from_set(case):
    g, A = case
    if A:
        assert not link(g, A) & A
        assert perp(g, A) <= link(g, A)


@given(graphs_with_subsets(count=3))
def test_odd_join_symmetric_and_monotone(case):
    g, A, B, C = case
    ab = joined_by_odd_path(g, A, B) is not None
    assert ab == (joined_by_odd_path(g, B, A) is not None)
    if ab:
        assert joined_by_odd_path(g, A | C, B) is not None
        assert joined_by_odd_path(g, A, B | C) is not None


@given(graphs())
def test_odd_components_refine_connected_components(g):
    comps = connected_components(g)
    for cls in odd_components(g):
        assert any(cls <= c for c in comps)


@settings(max_examples=200)
@given(graphs_with_subsets(count=2, max_vertices=7, labels=(2, 3, 4, 5)))
def test_odd_join_matches_path_enumeration(case):
    g, A, B = case
    assert (joined_by_odd_path(g, A, B) is not None) == brute_force_odd_join(g, A, B)


def test_odd_join_witness_is_in_one_class():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7), [2, 3, 4, 5, 7])
        A, B = random_subset(rng, g), random_subset(rng, g)
        w = joined_by_odd_path(g, A, B)
        if w is not None:
            assert w[0] in A and w[1] in B
            assert odd_components(g).same(*w)

#!/usr/bin/env python3
"""
Minimal vertex covers against hand values and networkx independent sets.
"""

import networkx as nx
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from src.models.errors import NotSquarefreeError, SizeLimitError, UniverseMismatchError
from src.models.schemas import Monomial
from src.tools.covers import is_cover, minimal_vertex_covers
from src.tools.graphs import complete_graph, empty_graph, from_edges, path, to_networkx
from src.tasks.rooted_order import rooted_list_path
from src.tools.monomials import divides, is_equigenerated, parse_monomial


def labels(covers):
    return {str(m) for m in covers}


@st.composite
def graphs(draw):
    n = draw(st.integers(2, 8))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return from_edges(n, draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1)))


def test_covers_of_p4():
    assert labels(minimal_vertex_covers(path(4))) == {"x1*x3", "x2*x3", "x2*x4"}


def test_edgeless_graph_has_unit_cover():
    assert minimal_vertex_covers(empty_graph(3)) == {Monomial.one(3)}


def test_covers_of_k3():
    assert labels(minimal_vertex_covers(complete_graph(3))) == {"x1*x2", "x1*x3", "x2*x3"}


def test_is_cover():
    g = path(4)
    assert is_cover(g, parse_monomial("x2*x3", 4))
    assert not is_cover(g, parse_monomial("x1*x4", 4))
    assert is_cover(g, Monomial.from_support(range(1, 5), 4))
    with pytest.raises(NotSquarefreeError):
        is_cover(g, parse_monomial("x2^2*x3", 4))
    with pytest.raises(UniverseMismatchError):
        is_cover(g, parse_monomial("x2*x3", 5))


def test_cover_cap():
    with pytest.raises(SizeLimitError):
        minimal_vertex_covers(path(6), cap=5)


def test_path_covers_hold_exactly_one_of_the_last_two_vertices():
    for n in range(2, 15):
        for cover in minimal_vertex_covers(path(n)):
            assert (cover.exps[n - 2] == 1) != (cover.exps[n - 1] == 1)


def test_path_cover_counts_follow_the_block_recursion():
    counts = {n: len(minimal_vertex_covers(path(n))) for n in range(1, 15)}
    for n in range(4, 15):
        assert counts[n] == counts[n - 2] + counts[n - 3]


@given(graphs())
def test_covers_are_complements_of_maximal_independent_sets(g):
    assume(g.has_edges)
    complement = nx.complement(to_networkx(g))
    expected = {frozenset(g.vertices - set(clique)) for clique in nx.find_cliques(complement)}
    assert {frozenset(m.support) for m in minimal_vertex_covers(g)} == expected


def test_generator_degrees():
    assert is_equigenerated(minimal_vertex_covers(path(4)))
    for n in range(5, 10):
        assert not is_equigenerated(minimal_vertex_covers(path(n)))
    for m in range(2, 6):
        assert is_equigenerated(minimal_vertex_covers(complete_graph(m)))


def test_covers_through_the_last_vertex_contain_a_shorter_path_cover():
    for n in range(3, 15):
        shorter = rooted_list_path(n - 2, universe=n)
        for cover in minimal_vertex_covers(path(n)):
            if cover.exps[n - 1] == 0:
                continue
            rest = Monomial(exps=cover.exps[:-1] + (0,))
            assert any(divides(v, rest) for v in shorter), (n, str(cover))

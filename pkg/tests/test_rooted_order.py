#!/usr/bin/env python3
"""
Rooted lists for paths and chordal graphs, maximal expressions and the
rooted order on powers.
"""

import json
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.errors import ChooserScriptError, ChordalityError, NotInPowerError
from src.models.schemas import ChooserStrategy, ChordalChooser, Ordering, Provenance
from src.tasks.power_gens import min_gens_power_brute
from src.tasks.rooted_order import (
    compare_rooted,
    load_chooser,
    maximal_expression,
    rooted_list_chordal,
    rooted_list_path,
    sort_rooted,
)
from src.tools.covers import minimal_vertex_covers
from src.tools.graphs import clique_glued_chordal, complete_graph, diamond, from_edges, path
from src.tools.monomials import multiply, parse_monomial, power, product

LARGEST = ChordalChooser(strategy=ChooserStrategy.LARGEST)


def test_rooted_list_of_small_paths():
    assert rooted_list_path(0).labels() == ["1"]
    assert rooted_list_path(1).labels() == ["1"]
    assert rooted_list_path(2).labels() == ["x1", "x2"]
    assert rooted_list_path(3).labels() == ["x2", "x1*x3"]


def test_rooted_list_of_p5_and_p6():
    assert rooted_list_path(5).labels() == ["x2*x4", "x1*x3*x4", "x1*x3*x5", "x2*x3*x5"]
    assert rooted_list_path(6).labels() == [
        "x1*x3*x5", "x2*x3*x5", "x2*x4*x5", "x2*x4*x6", "x1*x3*x4*x6",
    ]
    assert rooted_list_path(5).provenance == Provenance.PATH_ROOTED


def test_rooted_list_embeds_into_a_larger_universe():
    embedded = rooted_list_path(3, universe=5)
    assert embedded.universe == 5
    assert [g.exps for g in embedded] == [(0, 1, 0, 0, 0), (1, 0, 1, 0, 0)]


def test_rooted_list_path_matches_covers():
    for n in range(1, 15):
        assert set(rooted_list_path(n)) == minimal_vertex_covers(path(n))


def test_diamond_canonical_list():
    gens = rooted_list_chordal(diamond())
    assert gens.labels() == ["x2*x3", "x1*x3*x4", "x1*x2*x4"]
    assert gens.trace == ((1, 2, 3),)


def test_k3_canonical_list():
    assert rooted_list_chordal(complete_graph(3)).labels() == ["x2*x3", "x1*x3", "x1*x2"]


def test_largest_pick_on_paths_reproduces_the_path_list():
    for n in range(2, 11):
        assert rooted_list_chordal(path(n), LARGEST).gens == rooted_list_path(n).gens


def test_chooser_script_file(tmp_path):
    script = tmp_path / "chooser.json"
    script.write_text(json.dumps(list(range(7, 0, -1))))
    chooser = load_chooser(script)
    assert chooser.strategy == ChooserStrategy.SCRIPT
    assert rooted_list_chordal(path(7), chooser).gens == rooted_list_path(7).gens


def test_chooser_script_without_simplicial_label():
    chooser = ChordalChooser(strategy=ChooserStrategy.SCRIPT, script=(2,))
    with pytest.raises(ChooserScriptError):
        rooted_list_chordal(diamond(), chooser)


def test_malformed_chooser_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"strategy": "script"}')
    with pytest.raises(ChooserScriptError):
        load_chooser(bad)


def test_non_chordal_graph_is_rejected(load_fixture):
    with pytest.raises(ChordalityError):
        rooted_list_chordal(load_fixture("cycle_4.txt"))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10_000), st.sampled_from([ChooserStrategy.CANONICAL, ChooserStrategy.LARGEST]))
def test_chordal_rooted_list_is_the_cover_set(n, seed, strategy):
    g = clique_glued_chordal(n, seed)
    gens = rooted_list_chordal(g, ChordalChooser(strategy=strategy))
    assert set(gens) == minimal_vertex_covers(g)


def test_maximal_expression_resolves_the_p7_collision():
    base = rooted_list_path(7)
    u = base.gens
    assert multiply(u[2], u[5]) == multiply(u[3], u[4])
    expression = maximal_expression(multiply(u[3], u[4]), base, 2)
    assert expression.factors == (3, 6)


def test_maximal_expression_edge_cases():
    base = rooted_list_path(5)
    assert maximal_expression(power(base[0], 2), base, 2).counts == (2, 0, 0, 0)
    assert maximal_expression(parse_monomial("x1*x2", 3), rooted_list_path(3), 2) is None


def test_maximal_expression_agrees_with_first_occurrence():
    for n in (5, 6, 7):
        base = rooted_list_path(n)
        for s in (2, 3):
            result = min_gens_power_brute(base, s)
            for w in result.ranked:
                assert maximal_expression(w, base, s) == result.expressions[w]


def test_compare_rooted():
    p5 = rooted_list_path(5)
    u = p5.gens
    assert compare_rooted(multiply(u[0], u[2]), multiply(u[1], u[3]), p5, 2) == Ordering.GREATER
    assert compare_rooted(multiply(u[1], u[3]), multiply(u[0], u[2]), p5, 2) == Ordering.LESS
    assert compare_rooted(multiply(u[0], u[2]), multiply(u[0], u[2]), p5, 2) == Ordering.EQUAL
    p2 = rooted_list_path(2)
    assert compare_rooted(power(p2[0], 2), multiply(p2[0], p2[1]), p2, 2) == Ordering.GREATER
    with pytest.raises(NotInPowerError):
        compare_rooted(u[0], multiply(u[0], u[1]), p5, 2)


def test_sort_rooted_on_p2_powers():
    p2 = rooted_list_path(2)
    ordered = sort_rooted(min_gens_power_brute(p2, 3).minimal, p2, 3)
    assert ordered.labels() == ["x1^3", "x1^2*x2", "x1*x2^2", "x2^3"]
    assert ordered.provenance == Provenance.CUSTOM


def test_sort_rooted_on_p5_second_power():
    p5 = rooted_list_path(5)
    ordered = sort_rooted(min_gens_power_brute(p5, 2).minimal, p5, 2)
    assert len(ordered) == 9
    assert str(ordered[0]) == "x2^2*x4^2"
    assert str(ordered[-1]) == "x2^2*x3^2*x5^2"


def test_sort_rooted_singleton():
    p5 = rooted_list_path(5)
    assert sort_rooted(frozenset({p5[2]}), p5, 1).gens == (p5[2],)


def best_counts(gens, s):
    """Lex-greatest count vector per product, by listing every s-multiset."""
    best = {}
    q = len(gens)
    for combo in combinations_with_replacement(range(q), s):
        counts = tuple(combo.count(i) for i in range(q))
        m = product((gens[i] for i in combo), gens.universe)
        best[m] = max(best.get(m, counts), counts)
    return best


def small_lists():
    lists = [rooted_list_path(n) for n in range(2, 8)]
    lists.append(rooted_list_chordal(diamond()))
    lists.append(rooted_list_chordal(complete_graph(4)))
    lists.append(rooted_list_chordal(from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])))
    lists.append(rooted_list_chordal(path(6), LARGEST))
    for seed in (3, 11, 29):
        gens = rooted_list_chordal(clique_glued_chordal(6, seed))
        if len(gens) <= 8:
            lists.append(gens)
    return lists


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_maximal_expression_is_lex_greatest(s):
    for gens in small_lists():
        assert len(gens) <= 8
        for m, counts in best_counts(gens, s).items():
            assert maximal_expression(m, gens, s).counts == counts, (gens.labels(), str(m))


def test_maximal_expression_on_a_long_generator_list():
    matching = from_edges(22, [(2 * i - 1, 2 * i) for i in range(1, 12)])
    gens = rooted_list_chordal(matching)
    assert len(gens) == 2048
    q = len(gens)
    assert maximal_expression(gens[-1], gens, 1).counts == (0,) * (q - 1) + (1,)
    assert maximal_expression(power(gens[0], 2), gens, 2).counts == (2,) + (0,) * (q - 1)
    assert compare_rooted(gens[5], gens[1500], gens, 1) == Ordering.GREATER


def test_compare_rooted_is_a_total_order():
    cases = [(rooted_list_path(5), 2), (rooted_list_path(4), 3), (rooted_list_chordal(diamond()), 3)]
    flip = {Ordering.GREATER: Ordering.LESS, Ordering.LESS: Ordering.GREATER, Ordering.EQUAL: Ordering.EQUAL}
    for base, s in cases:
        elements = sorted(min_gens_power_brute(base, s).all_products, key=str)
        verdict = {(a, b): compare_rooted(a, b, base, s) for a in elements for b in elements}
        for a in elements:
            for b in elements:
                assert (verdict[a, b] == Ordering.EQUAL) == (a == b)
                assert verdict[b, a] == flip[verdict[a, b]]
                for c in elements:
                    if verdict[a, b] == Ordering.GREATER and verdict[b, c] == Ordering.GREATER:
                        assert verdict[a, c] == Ordering.GREATER

#!/usr/bin/env python3
"""
Rooted-list enumeration and the chordal explorer.
"""

import json
from pathlib import Path

import pytest

from src.chordal_explorer import EXIT_STATUS, ChordalExplorer, enumerate_rooted_lists, explore
from src.config import Budgets
from src.models.errors import ChordalityError
from src.models.schemas import ExploreSummary, Trial
from src.tasks.lq_verify import verify_main_theorem
from src.tasks.rooted_order import rooted_list_chordal, rooted_list_path
from src.tools.covers import minimal_vertex_covers
from src.tools.graphs import complete_graph, diamond, empty_graph, path

FIXTURES = Path(__file__).parent / "fixtures" / "graphs"
EVIDENCE_CORPUS = sorted(p.name for p in FIXTURES.glob("*.json"))


def test_diamond_lists():
    batch = enumerate_rooted_lists(diamond(), 100)
    assert not batch.truncated
    # picks 1 and 4 give the same list, block orders swap the last two terms
    assert [gens.labels() for gens in batch.lists] == [
        ["x2*x3", "x1*x3*x4", "x1*x2*x4"],
        ["x2*x3", "x1*x2*x4", "x1*x3*x4"],
    ]
    assert batch.lists[0].gens == rooted_list_chordal(diamond()).gens


def test_every_enumerated_list_is_the_cover_set():
    for g in (complete_graph(4), path(6), diamond()):
        covers = minimal_vertex_covers(g)
        for gens in enumerate_rooted_lists(g, 200).lists:
            assert set(gens) == covers


def test_k3_lists_truncate_at_cap():
    assert len(enumerate_rooted_lists(complete_graph(3), 100).lists) == 6
    batch = enumerate_rooted_lists(complete_graph(3), 4)
    assert batch.truncated
    assert len(batch.lists) == 4


def test_path_lists_include_the_path_rooted_list():
    batch = enumerate_rooted_lists(path(6), 100)
    assert rooted_list_path(6).gens in [gens.gens for gens in batch.lists]


def test_edgeless_graph_has_one_list():
    batch = enumerate_rooted_lists(empty_graph(3), 10)
    assert [gens.labels() for gens in batch.lists] == [["1"]]


def test_non_chordal_graph_is_rejected(load_fixture):
    with pytest.raises(ChordalityError):
        enumerate_rooted_lists(load_fixture("cycle_4.txt"), 10)


def test_diamond_exploration_passes_everywhere():
    report = explore(diamond(), 3, 100)
    assert report.summary == ExploreSummary.ALL_PASS
    assert EXIT_STATUS[report.summary] == 0
    assert len(report.trials) == 2 * 3
    assert all(t.f_equals_g and t.lq_verdict for t in report.trials)
    assert all(t.smart_claim for t in report.trials)
    assert [c.agrees for c in report.characterization] == [None, True, True]


def test_path_exploration_finds_the_rooted_order():
    report = explore(path(5), 2, 100)
    assert EXIT_STATUS[report.summary] == 0
    first = [t for t in report.trials if t.list_index == 0]
    assert all(t.passed for t in first)
    assert all(c.agrees for c in report.characterization if c.s >= 2)


def test_budget_limited_exploration_is_inconclusive():
    report = ChordalExplorer(Budgets(product_cap=1)).explore(diamond(), 2, 10)
    assert report.summary == ExploreSummary.INCONCLUSIVE
    assert EXIT_STATUS[report.summary] == 3
    assert all(t.skipped for t in report.trials)
    assert report.errors


def test_max_power_must_be_positive():
    with pytest.raises(ValueError):
        explore(diamond(), 0, 10)


def test_summaries():
    def trial(index, s, verdict):
        return Trial(list_index=index, chooser=[], s=s, f_equals_g=True, lq_verdict=verdict)

    summarize = ChordalExplorer._summarize
    assert summarize([trial(0, 1, True), trial(1, 1, True)], 2) == ExploreSummary.ALL_PASS
    assert summarize([trial(0, 1, True), trial(1, 1, False)], 2) == ExploreSummary.FOUND_ORDER
    assert summarize([trial(0, 1, False), trial(1, 1, False)], 2) == ExploreSummary.COUNTEREXAMPLE
    skipped = Trial(list_index=1, chooser=[], s=1, skipped=True)
    assert summarize([trial(0, 1, False), skipped], 2) == ExploreSummary.INCONCLUSIVE


def test_reports_are_deterministic():
    first = json.dumps(explore(complete_graph(3), 2, 10).to_payload())
    second = json.dumps(explore(complete_graph(3), 2, 10).to_payload())
    assert first == second


@pytest.mark.slow
@pytest.mark.parametrize("name", EVIDENCE_CORPUS)
def test_evidence_run_finds_no_counterexample(load_fixture, name):
    report = explore(load_fixture(name), 3, 32)
    assert EXIT_STATUS[report.summary] == 0


def test_evidence_corpus_is_the_whole_fixture_set():
    assert len(EVIDENCE_CORPUS) == 16
    assert "path_8.json" in EVIDENCE_CORPUS and "glued_7_seed29.json" in EVIDENCE_CORPUS


@pytest.mark.slow
def test_path_8_needs_a_good_rooted_list(load_fixture):
    report = explore(load_fixture("path_8.json"), 3, 32)
    assert report.summary == ExploreSummary.FOUND_ORDER
    assert any(t.lq_verdict is False for t in report.trials)


@pytest.mark.parametrize("cap", [0, -1])
def test_cap_must_be_positive(cap):
    with pytest.raises(ValueError):
        enumerate_rooted_lists(diamond(), cap)
    with pytest.raises(ValueError):
        explore(diamond(), 1, cap)


def test_cap_defaults_to_the_budget():
    report = ChordalExplorer(Budgets(explore_cap=1)).explore(complete_graph(3), 1)
    assert report.cap == 1
    assert report.lists_enumerated == 1
    assert report.truncated


def test_oversized_base_list_skips_its_cells():
    report = ChordalExplorer(Budgets(max_generators=2)).explore(diamond(), 2, 10)
    assert all(t.skipped for t in report.trials)
    assert report.summary == ExploreSummary.INCONCLUSIVE
    assert EXIT_STATUS[report.summary] == 3


@pytest.mark.parametrize("n", range(2, 7))
def test_path_exploration_matches_the_main_theorem(n):
    batch = enumerate_rooted_lists(path(n), 100)
    index = [gens.gens for gens in batch.lists].index(rooted_list_path(n).gens)
    report = explore(path(n), 2, 100)
    for t in report.trials:
        if t.list_index == index:
            expected = verify_main_theorem(n, t.s)
            assert t.lq_verdict == expected.verdict
            assert t.failure_index == expected.failure_index

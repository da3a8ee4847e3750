import logging
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Tuple

from .config import Budgets, load_budgets
from .models.errors import BudgetExceededError, ChordalityError
from .models.schemas import (
    CharacterizationCheck,
    ExploreReport,
    ExploreSummary,
    GeneratorList,
    Graph,
    LqReport,
    Monomial,
    Provenance,
    RootedListBatch,
    Trial,
)
from .tasks.lq_verify import has_linear_quotients, smart_claim_violations
from .tasks.power_gens import characterization_power, min_gens_power_brute
from .tasks.rooted_order import sort_rooted
from .tools.graphs import delete_vertices, is_chordal, simplicial_vertices

logger = logging.getLogger(__name__)

Exps = Tuple[int, ...]
Trace = List[Tuple[int, ...]]

EXIT_STATUS = {
    ExploreSummary.ALL_PASS: 0,
    ExploreSummary.FOUND_ORDER: 0,
    ExploreSummary.COUNTEREXAMPLE: 2,
    ExploreSummary.INCONCLUSIVE: 3,
}


def _iter_rooted(graph: Graph) -> Iterator[Tuple[List[Exps], Trace]]:
    """Every rooted list of ``graph`` with its decision trace.

    Picks ascend, then neighbor block orders ascend lexicographically, so
    the first list produced is the canonical one.
    """
    if not graph.has_edges:
        yield [(0,) * graph.n], []
        return
    adj = graph.adjacency()
    for pick in (v for v in simplicial_vertices(graph) if adj[v]):
        for rest in permutations(sorted(adj[pick])):
            block = (pick,) + rest
            for exps, trace in _iter_blocks(graph, adj, block, 0):
                yield exps, [block] + trace


def _iter_blocks(graph: Graph, adj, block: Tuple[int, ...], k: int) -> Iterator[Tuple[List[Exps], Trace]]:
    if k == len(block):
        yield [], []
        return
    x = block[k]
    factor = [0] * graph.n
    for v in adj[x]:
        factor[v - 1] = 1
    sub = delete_vertices(graph, adj[x] | {x})
    for head, head_trace in _iter_rooted(sub):
        lifted = [tuple(a + b for a, b in zip(u, factor)) for u in head]
        for tail, tail_trace in _iter_blocks(graph, adj, block, k + 1):
            yield lifted + tail, head_trace + tail_trace


class ChordalExplorer:
    """Searches rooted lists of a chordal graph for one whose rooted order
    gives linear quotients on every power within budget."""

    def __init__(self, budgets: Optional[Budgets] = None):
        self.budgets = budgets or load_budgets()
        self._base_reports: Dict[Tuple[Monomial, ...], LqReport] = {}

    def _check_cap(self, cap: Optional[int]) -> int:
        cap = self.budgets.explore_cap if cap is None else cap
        if cap < 1:
            raise ValueError(f"cap must be a positive integer, got {cap}")
        return cap

    def enumerate_rooted_lists(self, graph: Graph, cap: Optional[int] = None) -> RootedListBatch:
        """Distinct rooted lists over all simplicial picks and block orders,
        truncated at ``cap``."""
        cap = self._check_cap(cap)
        if not is_chordal(graph):
            raise ChordalityError("rooted lists are only defined for chordal graphs")
        seen = set()
        lists: List[GeneratorList] = []
        truncated = False
        for exps, trace in _iter_rooted(graph):
            key = tuple(exps)
            if key in seen:
                continue
            if len(lists) == cap:
                truncated = True
                break
            seen.add(key)
            lists.append(
                GeneratorList(
                    gens=tuple(Monomial(exps=e) for e in exps),
                    provenance=Provenance.CHORDAL_ROOTED,
                    universe=graph.n,
                    trace=tuple(trace),
                )
            )
        logger.info("enumerated %d rooted lists%s", len(lists), " (truncated)" if truncated else "")
        return RootedListBatch(lists=lists, truncated=truncated)

    def _base_report(self, gens: GeneratorList) -> LqReport:
        if gens.gens not in self._base_reports:
            self._base_reports[gens.gens] = has_linear_quotients(gens, budgets=self.budgets)
        return self._base_reports[gens.gens]

    def _power_oracle(self, canonical: GeneratorList, s: int):
        """Order-independent G(J(G)^s), F = G flag and characterization agreement."""
        power = min_gens_power_brute(canonical, s, self.budgets)
        agrees = None
        if s >= 2:
            pairs = characterization_power(canonical, s, self.budgets)
            agrees = pairs.minimal == power.minimal
        return power.minimal, power.all_products == power.minimal, agrees

    def explore(self, graph: Graph, max_s: int, cap: Optional[int] = None) -> ExploreReport:
        if max_s < 1:
            raise ValueError(f"max_s must be positive, got {max_s}")
        cap = self._check_cap(cap)
        batch = self.enumerate_rooted_lists(graph, cap)
        canonical = batch.lists[0]

        oracles: Dict[int, Optional[tuple]] = {}
        characterization = []
        errors: List[str] = []
        for s in range(1, max_s + 1):
            try:
                minimal, f_equals_g, agrees = self._power_oracle(canonical, s)
                oracles[s] = (minimal, f_equals_g)
                characterization.append(CharacterizationCheck(s=s, agrees=agrees))
            except BudgetExceededError as e:
                oracles[s] = None
                characterization.append(CharacterizationCheck(s=s))
                errors.append(f"s={s}: {e}")
                logger.warning("skipping s=%d: %s", s, e)

        trials: List[Trial] = []
        for index, gens in enumerate(batch.lists):
            chooser = [list(step) for step in gens.trace or ()]
            for s in range(1, max_s + 1):
                trials.append(self._run_trial(index, chooser, gens, s, oracles[s]))

        summary = self._summarize(trials, len(batch.lists))
        logger.info("explored %d lists up to s=%d: %s", len(batch.lists), max_s, summary.value)
        return ExploreReport(
            graph=graph,
            max_s=max_s,
            cap=cap,
            lists_enumerated=len(batch.lists),
            truncated=batch.truncated,
            trials=trials,
            characterization=characterization,
            summary=summary,
            errors=errors,
        )

    def _run_trial(
        self,
        index: int,
        chooser: List[List[int]],
        gens: GeneratorList,
        s: int,
        oracle: Optional[tuple],
    ) -> Trial:
        if oracle is None:
            return Trial(list_index=index, chooser=chooser, s=s, skipped=True, skip_reason="power enumeration over budget")
        minimal, f_equals_g = oracle
        try:
            base_report = self._base_report(gens)
            ordered = sort_rooted(minimal, gens, s)
            report = has_linear_quotients(ordered, budgets=self.budgets)
        except BudgetExceededError as e:
            return Trial(list_index=index, chooser=chooser, s=s, skipped=True, skip_reason=str(e))
        smart_claim = None
        if f_equals_g:
            smart_claim = not smart_claim_violations(ordered, gens, s, report, base_report)
        return Trial(
            list_index=index,
            chooser=chooser,
            s=s,
            f_equals_g=f_equals_g,
            lq_verdict=report.verdict,
            failure_index=report.failure_index,
            smart_claim=smart_claim,
        )

    @staticmethod
    def _summarize(trials: List[Trial], list_count: int) -> ExploreSummary:
        if all(t.passed for t in trials):
            return ExploreSummary.ALL_PASS
        by_list: Dict[int, List[Trial]] = {}
        for t in trials:
            by_list.setdefault(t.list_index, []).append(t)
        if any(all(t.passed for t in cells) for cells in by_list.values()):
            return ExploreSummary.FOUND_ORDER
        failing = [i for i, cells in by_list.items() if any(t.lq_verdict is False for t in cells)]
        if len(failing) == list_count:
            return ExploreSummary.COUNTEREXAMPLE
        return ExploreSummary.INCONCLUSIVE


def enumerate_rooted_lists(graph: Graph, cap: int) -> RootedListBatch:
    return ChordalExplorer().enumerate_rooted_lists(graph, cap)


def explore(graph: Graph, max_s: int, cap: int) -> ExploreReport:
    return ChordalExplorer().explore(graph, max_s, cap)

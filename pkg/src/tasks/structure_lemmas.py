"""Exhaustive small-instance checks of the block structure of
G(J(P_n)^s) under the rooted order."""

import logging
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from ..config import Budgets
from ..models.errors import BudgetExceededError
from ..models.schemas import ClauseResult, GeneratorList, LemmaReport, Monomial, PowerGens
from ..tools.monomials import exponent_matrix
from .power_gens import bad_pair_table, iter_products, min_gens_power_brute
from .rooted_order import maximal_expression, rooted_list_path

logger = logging.getLogger(__name__)

MAX_N = 10
MAX_S = 4


def _scaled(exps: Tuple[int, ...], labels: Tuple[int, ...], times: int) -> Monomial:
    out = list(exps)
    for i in labels:
        out[i - 1] += times
    return Monomial(exps=tuple(out))


def _combine(gens: GeneratorList, counts) -> Monomial:
    total = [0] * gens.universe
    for g, a in zip(gens.gens, counts):
        for i, e in enumerate(g.exps):
            total[i] += a * e
    return Monomial(exps=tuple(total))


def _pure_block_clause(
    name: str, full: PowerGens, sub: PowerGens, labels: Tuple[int, ...], divisor_label: int, s: int
) -> ClauseResult:
    """Multiplying by prod(labels)^s maps F, G and the rooted order of the
    smaller path onto the x_{divisor_label}^s part of the larger one."""
    clause = ClauseResult(name=name, passed=True, checked=len(sub.ranked))
    lifted = [_scaled(m.exps, labels, s) for m in sub.ranked]
    block = [w for w in full.ranked if w.exps[divisor_label - 1] >= s]
    if lifted != block:
        missing = set(block) ^ set(lifted)
        clause.passed = False
        clause.counterexample = (
            f"block mismatch at {sorted(str(m) for m in missing)[:3]}"
            if missing
            else "rooted order not preserved by the block lift"
        )
        return clause
    for m, w in zip(sub.ranked, lifted):
        if (m in sub.minimal) != (w in full.minimal):
            clause.passed = False
            clause.counterexample = f"minimality differs for {m} and its lift {w}"
            break
    return clause


def check_structure_lemmas(n: int, s: int, budgets: Optional[Budgets] = None) -> LemmaReport:
    """Verify the block lemmas for J(P_n)^s exhaustively.

    (a) x_{n-1}^s block, (b) x_n^s x_{n-2}^s block, (c) mixed products
    project to maximal expressions and minimal generators, (d) every
    non-minimal product has a minimal divisor earlier in rooted order,
    (e) every non-minimal product carries a bad pair, (f) sub-pairs of a
    maximal expression are maximal.
    """
    if n < 1 or s < 1:
        raise ValueError(f"need n >= 1 and s >= 1, got n={n}, s={s}")
    if n > MAX_N or s > MAX_S:
        raise BudgetExceededError(f"structure checks are limited to n <= {MAX_N}, s <= {MAX_S}")

    base = rooted_list_path(n)
    full = min_gens_power_brute(base, s, budgets)
    clauses: List[ClauseResult] = []

    if n >= 3:
        sub = min_gens_power_brute(rooted_list_path(n - 2, universe=n), s, budgets)
        clauses.append(_pure_block_clause("x_{n-1}^s block", full, sub, (n - 1,), n - 1, s))
    else:
        clauses.append(ClauseResult(name="x_{n-1}^s block", passed=True))

    if n >= 4:
        sub = min_gens_power_brute(rooted_list_path(n - 3, universe=n), s, budgets)
        clauses.append(_pure_block_clause("x_n^s x_{n-2}^s block", full, sub, (n, n - 2), n, s))
        clauses.append(_mixed_clause(n, s, full, budgets))
    else:
        clauses.append(ClauseResult(name="x_n^s x_{n-2}^s block", passed=True))
        clauses.append(ClauseResult(name="mixed products", passed=True))

    clauses.append(_earlier_divisor_clause(full))
    clauses.append(_bad_pair_clause(base, s, full, budgets))
    clauses.append(_heredity_clause(base, s, full, budgets))

    report = LemmaReport(n=n, s=s, passed=all(c.passed for c in clauses), clauses=clauses)
    logger.info("structure lemmas for P_%d, s=%d: %s", n, s, "pass" if report.passed else "FAIL")
    return report


def _mixed_clause(n: int, s: int, full: PowerGens, budgets: Optional[Budgets]) -> ClauseResult:
    first = rooted_list_path(n - 2, universe=n)
    second = rooted_list_path(n - 3, universe=n)
    a = len(first)
    clause = ClauseResult(name="mixed products", passed=True)

    @lru_cache(maxsize=None)
    def minimal_of(which: int, power: int) -> frozenset:
        gens = first if which == 0 else second
        return min_gens_power_brute(gens, power, budgets).minimal

    for w in full.ranked:
        counts = full.expressions[w].counts
        head, tail = counts[:a], counts[a:]
        q, k = sum(head), sum(tail)
        if not q or not k:
            continue
        clause.checked += 1
        u, v = _combine(first, head), _combine(second, tail)
        u_expr = maximal_expression(u, first, q)
        v_expr = maximal_expression(v, second, k)
        if u_expr is None or u_expr.counts != head or v_expr is None or v_expr.counts != tail:
            clause.passed = False
            clause.counterexample = f"projection of {w} is not a maximal expression"
            break
        if w in full.minimal and (u not in minimal_of(0, q) or v not in minimal_of(1, k)):
            clause.passed = False
            clause.counterexample = f"{w} is minimal but its projections {u}, {v} are not"
            break
    return clause


def _earlier_divisor_clause(full: PowerGens) -> ClauseResult:
    clause = ClauseResult(name="earlier minimal divisor", passed=True)
    rank = {m: i for i, m in enumerate(full.ranked)}
    minimal = sorted(full.minimal, key=rank.__getitem__)
    matrix = exponent_matrix(minimal, full.base.universe)
    ranks = np.array([rank[m] for m in minimal], dtype=np.int64)
    for u in full.ranked:
        if u in full.minimal:
            continue
        clause.checked += 1
        divides = (matrix <= np.array(u.exps, dtype=np.int64)).all(axis=1)
        if not (divides & (ranks < rank[u])).any():
            clause.passed = False
            clause.counterexample = f"{u} has no minimal divisor above it in rooted order"
            break
    return clause


def _bad_pair_clause(base: GeneratorList, s: int, full: PowerGens, budgets: Optional[Budgets]) -> ClauseResult:
    clause = ClauseResult(name="non-minimal products carry a bad pair", passed=True)
    table = bad_pair_table(base, budgets)
    seen = set()
    for combo, exps in iter_products(base, s):
        if Monomial(exps=exps) in full.minimal:
            continue
        clause.checked += 1
        used = sorted({i + 1 for i in combo})
        bad = [pair for pair in combinations(used, 2) if table.is_bad(*pair)]
        if not bad:
            clause.passed = False
            clause.counterexample = f"multiset {[i + 1 for i in combo]} is non-minimal without a bad pair"
            break
        seen.update(bad)
    clause.witnesses = [list(pair) for pair in sorted(seen)]
    return clause


def _heredity_clause(base: GeneratorList, s: int, full: PowerGens, budgets: Optional[Budgets]) -> ClauseResult:
    clause = ClauseResult(name="maximal expressions restrict to maximal pairs", passed=True)
    if s < 2:
        return clause
    second = min_gens_power_brute(base, 2, budgets)
    for w in full.ranked:
        used = full.expressions[w].used
        for p, q in combinations(used, 2):
            clause.checked += 1
            pair = Monomial(exps=tuple(a + b for a, b in zip(base.gens[p - 1].exps, base.gens[q - 1].exps)))
            if second.expressions[pair].factors != (p, q):
                clause.passed = False
                clause.counterexample = f"u_{p}u_{q} inside the maximal expression of {w} is not maximal"
                return clause
    return clause

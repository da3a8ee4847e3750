"""Linear-quotient certification, the colon-ideal propositions for powers
of path cover ideals, and the regularity formula."""

import logging
from typing import Dict, List, Optional, Set

import numpy as np

from ..config import Budgets, default_budgets
from ..models.errors import BudgetExceededError
from ..models.schemas import (
    ClauseResult,
    Expression,
    GeneratorList,
    LemmaReport,
    LqReport,
    LqStep,
    Method,
    Monomial,
    RegularityReport,
)
from ..tools.monomials import canonical_sort, exponent_matrix, format_monomial, minimalize, variable_generated
from .power_gens import min_gens_power, min_gens_power_brute
from .rooted_order import maximal_expression, rooted_list_path, sort_rooted

logger = logging.getLogger(__name__)


def has_linear_quotients(
    ordered: GeneratorList, retain: bool = False, budgets: Optional[Budgets] = None
) -> LqReport:
    """Check every colon (u_1, ..., u_{r-1}) : (u_r) for generation by variables.

    The colon of a monomial ideal by a monomial is generated by the
    elementwise colons u_i : u_r, so each step works on that matrix.
    """
    budgets = budgets or default_budgets()
    if len(ordered) < 1:
        raise ValueError("linear quotients need at least one generator")
    if len(ordered) > budgets.max_generators:
        raise BudgetExceededError(
            f"{len(ordered)} generators exceeds the certification cap {budgets.max_generators}"
        )
    matrix = exponent_matrix(ordered.gens, ordered.universe)
    steps: List[LqStep] = []
    failure = None
    for r in range(1, len(ordered)):
        colons = np.maximum(matrix[:r] - matrix[r], 0)
        ok, variables = variable_generated(colons)
        gens_text = None
        if retain or (not ok and failure is None):
            survivors = minimalize(Monomial(exps=tuple(int(e) for e in row)) for row in colons)
            gens_text = [format_monomial(m) for m in canonical_sort(survivors)]
        if not ok and failure is None:
            failure = r + 1
            logger.info("linear quotients fail at step %d: colon generated by %s", failure, gens_text)
        steps.append(
            LqStep(
                r=r + 1,
                colon_vars=variables,
                raw_colon_count=int(np.unique(colons, axis=0).shape[0]),
                colon_gens=gens_text,
            )
        )
    return LqReport(ordered=ordered, verdict=failure is None, failure_index=failure, steps=steps)


def rooted_power_list(n: int, s: int, budgets: Optional[Budgets] = None) -> GeneratorList:
    """R(J(P_n)^s): G(J(P_n)^s) from the pairs method in rooted order."""
    base = rooted_list_path(n)
    power = min_gens_power(base, s, Method.PAIRS, budgets)
    return sort_rooted(power.minimal, base, s)


def verify_main_theorem(n: int, s: int, budgets: Optional[Budgets] = None) -> LqReport:
    report = has_linear_quotients(rooted_power_list(n, s, budgets), budgets=budgets)
    logger.info("J(P_%d)^%d linear quotients in rooted order: %s", n, s, report.verdict)
    return report


def _step_vars(report: LqReport) -> Dict[int, Set[int]]:
    """1-based position -> variables generating its colon ideal."""
    return {step.r: set(step.colon_vars) for step in report.steps}


def smart_claim_violations(
    ordered: GeneratorList,
    base: GeneratorList,
    s: int,
    ordered_report: Optional[LqReport] = None,
    base_report: Optional[LqReport] = None,
    expressions: Optional[Dict[Monomial, Expression]] = None,
) -> List[List[int]]:
    """Pairs [r, i] where the colon of ``base`` at index i (a factor of
    Y_r's maximal expression) is not contained in the colon of Y_r."""
    ordered_vars = _step_vars(ordered_report or has_linear_quotients(ordered))
    base_vars = _step_vars(base_report or has_linear_quotients(base))
    violations = []
    for r, y in enumerate(ordered.gens[1:], start=2):
        expression = (expressions or {}).get(y) or maximal_expression(y, base, s)
        for i in expression.used:
            if i >= 2 and not base_vars[i] <= ordered_vars[r]:
                violations.append([r, i])
    return violations


def smart_claim_holds(ordered: GeneratorList, base: GeneratorList, s: int) -> bool:
    return not smart_claim_violations(ordered, base, s)


def check_colon_propositions(n: int, s: int, budgets: Optional[Budgets] = None) -> LemmaReport:
    """(a) x_{n-1} lies in the colon of every Y_r divisible by x_n;
    (b) base colons at factor indices of Y_r lie in the colon of Y_r;
    (c) a variable of (u_1..u_{i-1}):(u_i) dividing u_j makes u_iu_j
    non-minimal or non-maximal."""
    base = rooted_list_path(n)
    ordered = rooted_power_list(n, s, budgets)
    ordered_report = has_linear_quotients(ordered, budgets=budgets)
    base_report = has_linear_quotients(base, budgets=budgets)
    ordered_vars = _step_vars(ordered_report)
    base_vars = _step_vars(base_report)

    clause_a = ClauseResult(name="x_n forces x_{n-1} in colon", passed=True)
    if n >= 2:
        for r, y in enumerate(ordered.gens[1:], start=2):
            if y.exps[n - 1] == 0:
                continue
            clause_a.checked += 1
            if n - 1 not in ordered_vars[r]:
                clause_a.passed = False
                clause_a.counterexample = f"Y_{r} = {y} lacks x{n - 1} in its colon"
                break

    violations = smart_claim_violations(ordered, base, s, ordered_report, base_report)
    clause_b = ClauseResult(
        name="base colon contained in power colon",
        passed=not violations,
        checked=max(len(ordered) - 1, 0),
        counterexample=(
            f"Y_{violations[0][0]} misses colon variables of u_{violations[0][1]}" if violations else None
        ),
    )

    clause_c = ClauseResult(name="shared colon variable breaks u_iu_j", passed=True)
    second = min_gens_power_brute(base, 2, budgets)
    for i in range(2, len(base) + 1):
        for j in range(i + 1, len(base) + 1):
            u_j = base.gens[j - 1]
            if not any(u_j.exps[v - 1] for v in base_vars[i]):
                continue
            clause_c.checked += 1
            clause_c.witnesses.append([i, j])
            product = Monomial(exps=tuple(a + b for a, b in zip(base.gens[i - 1].exps, u_j.exps)))
            minimal = product in second.minimal
            is_maximal = second.expressions[product].factors == (i, j)
            if minimal and is_maximal:
                clause_c.passed = False
                clause_c.counterexample = f"u_{i}u_{j} = {product} is minimal and maximal"
                break
        if not clause_c.passed:
            break

    clauses = [clause_a, clause_b, clause_c]
    return LemmaReport(n=n, s=s, passed=all(c.passed for c in clauses), clauses=clauses)


def reg_formula(n: int, s: int) -> int:
    """2ks when n = 3k or 3k+1, and 2ks + s when n = 3k+2."""
    if n < 2:
        raise ValueError(f"the regularity formula needs n >= 2, got {n}")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    k = n // 3
    return 2 * k * s + (s if n % 3 == 2 else 0)


def regularity_report(n: int, s: int, budgets: Optional[Budgets] = None) -> RegularityReport:
    formula = reg_formula(n, s)
    base = rooted_list_path(n)
    max_degree = min_gens_power(base, s, Method.PAIRS, budgets).max_degree
    return RegularityReport(formula=formula, max_degree=max_degree, match=formula == max_degree)


def verify_regularity(n: int, s: int, budgets: Optional[Budgets] = None) -> bool:
    return regularity_report(n, s, budgets).match

"""F(I^s) and G(I^s): brute-force oracle and the pairwise characterization
for paths."""

import logging
import time
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..config import Budgets, default_budgets
from ..models.errors import BudgetExceededError, CharacterizationScopeError
from ..models.schemas import (
    BadPairTable,
    Expression,
    GeneratorList,
    Method,
    Monomial,
    PowerGens,
    PowerRecord,
    Provenance,
)
from ..tools.monomials import exponent_matrix, minimalize, non_minimal_mask
from .rooted_order import rooted_list_path

logger = logging.getLogger(__name__)


def multiset_count(q: int, s: int) -> int:
    """Number of s-multisets over q generators, C(q+s-1, s)."""
    return comb(q + s - 1, s) if q else 0


def check_product_budget(gens: GeneratorList, s: int, budgets: Optional[Budgets] = None) -> int:
    budgets = budgets or default_budgets()
    count = multiset_count(len(gens), s)
    if count > budgets.product_cap:
        raise BudgetExceededError(
            f"{count} multisets of size {s} over {len(gens)} generators exceeds cap {budgets.product_cap}"
        )
    return count


def iter_products(gens: GeneratorList, s: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Yield (0-based index tuple, product exponents) for i_1 <= ... <= i_s.

    Tuples come in lex-ascending order, which is lex-descending order of the
    count vectors, so the first tuple reaching a monomial is its maximal
    expression.
    """
    rows = np.array([g.exps for g in gens.gens], dtype=np.int64).reshape(len(gens), gens.universe)
    for combo in combinations_with_replacement(range(len(gens)), s):
        yield combo, tuple(int(e) for e in rows[list(combo)].sum(axis=0))


def _enumerate(gens: GeneratorList, s: int, budgets: Optional[Budgets]):
    check_product_budget(gens, s, budgets)
    q = len(gens)
    first: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    combos: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    for combo, exps in iter_products(gens, s):
        combos.append((combo, exps))
        first.setdefault(exps, combo)
    ranked = tuple(Monomial(exps=e) for e in first)
    expressions = {
        m: Expression.from_factors([i + 1 for i in first[m.exps]], q) for m in ranked
    }
    return combos, ranked, expressions


def s_fold_products(gens: GeneratorList, s: int, budgets: Optional[Budgets] = None) -> frozenset:
    """F(I^s): every distinct product of s generators with repetition."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    check_product_budget(gens, s, budgets)
    return frozenset(Monomial(exps=exps) for _, exps in iter_products(gens, s))


def min_gens_power_brute(gens: GeneratorList, s: int, budgets: Optional[Budgets] = None) -> PowerGens:
    """G(I^s) by definition: minimalize F(I^s)."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    combos, ranked, expressions = _enumerate(gens, s, budgets)
    minimal = minimalize(ranked)
    kept = {m.exps for m in minimal}
    excluded = sum(1 for _, exps in combos if exps not in kept)
    logger.info(
        "brute %s^%d: %d products, %d minimal generators",
        gens.source or "I", s, len(ranked), len(minimal),
    )
    return PowerGens(
        base=gens,
        s=s,
        all_products=frozenset(ranked),
        minimal=minimal,
        method=Method.BRUTE,
        ranked=ranked,
        expressions=expressions,
        excluded_multiset_count=excluded,
    )


def bad_pair_table(gens: GeneratorList, budgets: Optional[Budgets] = None) -> BadPairTable:
    """Pairs (p, q), p <= q, whose product is strictly divisible by some
    2-fold product."""
    check_product_budget(gens, 2, budgets)
    pair_products = list(iter_products(gens, 2))
    if not pair_products:
        return BadPairTable(base=gens, pairs=frozenset())
    distinct = sorted({exps for _, exps in pair_products})
    mask = non_minimal_mask(np.array(distinct, dtype=np.int64).reshape(len(distinct), gens.universe))
    non_minimal = {exps for exps, dropped in zip(distinct, mask) if dropped}
    pairs = frozenset(
        (combo[0] + 1, combo[1] + 1) for combo, exps in pair_products if exps in non_minimal
    )
    logger.debug("bad pairs for %s: %s", gens.source or "I", sorted(pairs))
    return BadPairTable(base=gens, pairs=pairs)


def has_bad_pair(used: Iterable[int], table: BadPairTable) -> bool:
    """True if two distinct 1-based indices in ``used`` form a bad pair."""
    return any(table.is_bad(p, q) for p, q in combinations(sorted(set(used)), 2))


def characterization_power(
    gens: GeneratorList, s: int, budgets: Optional[Budgets] = None
) -> PowerGens:
    """Bad-pair filter without the provenance check.

    Only proven for paths; the explorer uses it to record agreement on
    other chordal graphs.
    """
    table = bad_pair_table(gens, budgets)
    combos, ranked, expressions = _enumerate(gens, s, budgets)
    minimal = set()
    excluded = 0
    for combo, exps in combos:
        if has_bad_pair((i + 1 for i in combo), table):
            excluded += 1
        else:
            minimal.add(Monomial(exps=exps))
    return PowerGens(
        base=gens,
        s=s,
        all_products=frozenset(ranked),
        minimal=frozenset(minimal),
        method=Method.PAIRS,
        ranked=ranked,
        expressions=expressions,
        excluded_multiset_count=excluded,
    )


def min_gens_power_pairs(gens: GeneratorList, s: int, budgets: Optional[Budgets] = None) -> PowerGens:
    """G(J(P_n)^s) as the s-fold products whose factors pairwise multiply
    to minimal generators of the second power."""
    if gens.provenance != Provenance.PATH_ROOTED:
        raise CharacterizationScopeError(
            f"the pairwise characterization is only established for path rooted lists, "
            f"got {gens.provenance.value}"
        )
    if s < 2:
        raise ValueError(f"the pairwise characterization needs s >= 2, got {s}")
    result = characterization_power(gens, s, budgets)
    logger.info(
        "pairs %s^%d: %d minimal generators, %d multisets excluded",
        gens.source or "I", s, len(result.minimal), result.excluded_multiset_count,
    )
    return result


def min_gens_power(gens: GeneratorList, s: int, method: Method, budgets: Optional[Budgets] = None) -> PowerGens:
    """Dispatch on method; s = 1 is G(I) itself for either method."""
    if method == Method.PAIRS and s >= 2:
        return min_gens_power_pairs(gens, s, budgets)
    if method == Method.PAIRS and gens.provenance != Provenance.PATH_ROOTED:
        raise CharacterizationScopeError("the pairwise characterization is only established for paths")
    result = min_gens_power_brute(gens, s, budgets)
    return result.model_copy(update={"method": method})


def power_record(result: PowerGens, elapsed_ms: Optional[float] = None) -> PowerRecord:
    return PowerRecord(
        n=result.base.universe,
        source=result.base.source,
        s=result.s,
        method=result.method,
        count=len(result.minimal),
        max_degree=result.max_degree,
        excluded_multiset_count=result.excluded_multiset_count,
        elapsed_ms=elapsed_ms,
    )


def power_table(
    ns: Iterable[int],
    ss: Iterable[int],
    method: Method = Method.PAIRS,
    budgets: Optional[Budgets] = None,
    timing: bool = False,
) -> pd.DataFrame:
    """μ(J(P_n)^s) table with the multiset upper bound C(q+s-1, s)."""
    rows = []
    ss = list(ss)
    for n in ns:
        gens = rooted_list_path(n)
        for s in ss:
            start = time.perf_counter()
            try:
                result = min_gens_power(gens, s, method, budgets)
            except BudgetExceededError as e:
                logger.warning("skipping P_%d^%d: %s", n, s, e)
                continue
            elapsed = (time.perf_counter() - start) * 1000 if timing else None
            record = power_record(result, elapsed).model_dump(mode="json", exclude_none=True)
            record["q"] = len(gens)
            record["multiset_bound"] = multiset_count(len(gens), s)
            rows.append(record)
    columns = ["n", "s", "method", "q", "count", "multiset_bound", "max_degree", "excluded_multiset_count"]
    if timing:
        columns.append("elapsed_ms")
    return pd.DataFrame(rows, columns=columns)

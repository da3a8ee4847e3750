"""Rooted lists of paths and chordal graphs, maximal expressions and the
rooted order on s-fold products."""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..models.errors import (
    ChooserScriptError,
    ChordalityError,
    ConstructionIntegrityError,
    NotInPowerError,
    UniverseMismatchError,
)
from ..models.schemas import (
    ChooserStrategy,
    ChordalChooser,
    Expression,
    GeneratorList,
    Graph,
    Monomial,
    MonomialSet,
    Ordering,
    Provenance,
)
from ..tools.graphs import delete_vertices, is_chordal, simplicial_vertices

logger = logging.getLogger(__name__)

Exps = Tuple[int, ...]


def _unit(n: int) -> Exps:
    return (0,) * n


def _with(exps: Exps, *labels: int) -> Exps:
    out = list(exps)
    for i in labels:
        out[i - 1] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _path_exps(n: int, universe: int) -> Tuple[Exps, ...]:
    one = _unit(universe)
    if n <= 1:
        return (one,)
    if n == 2:
        return (_with(one, 1), _with(one, 2))
    if n == 3:
        return (_with(one, 2), _with(one, 1, 3))
    first = tuple(_with(u, n - 1) for u in _path_exps(n - 2, universe))
    second = tuple(_with(v, n, n - 2) for v in _path_exps(n - 3, universe))
    return first + second


def rooted_list_path(n: int, universe: Optional[int] = None) -> GeneratorList:
    """R(P_n); ``universe`` embeds the list into more variables."""
    if n < 0:
        raise ValueError(f"path length must be non-negative, got {n}")
    universe = n if universe is None else universe
    if universe < n:
        raise UniverseMismatchError(f"P_{n} does not fit in {universe} variables")
    return GeneratorList(
        gens=tuple(Monomial(exps=e) for e in _path_exps(n, universe)),
        provenance=Provenance.PATH_ROOTED,
        universe=universe,
        source=f"P_{n}",
    )


def _candidates(graph: Graph) -> List[int]:
    adj = graph.adjacency()
    return [v for v in simplicial_vertices(graph) if adj[v]]


def choose_simplicial(graph: Graph, chooser: ChordalChooser) -> int:
    candidates = _candidates(graph)
    if not candidates:
        raise ChordalityError("graph with edges has no non-isolated simplicial vertex")
    if chooser.strategy == ChooserStrategy.LARGEST:
        return candidates[-1]
    if chooser.strategy == ChooserStrategy.SCRIPT:
        for v in chooser.script:
            if v in candidates:
                return v
        raise ChooserScriptError(
            f"no scripted label is a simplicial vertex of the subgraph on "
            f"{sorted(graph.vertices)} (candidates {candidates})"
        )
    return candidates[0]


def _neighbor_exps(graph: Graph, adj, v: int) -> Exps:
    return _with(_unit(graph.n), *sorted(adj[v]))


def rooted_list_chordal(graph: Graph, chooser: Optional[ChordalChooser] = None) -> GeneratorList:
    """Rooted list R(G) of a chordal graph.

    For the chosen simplicial x_1 with N[x_1] = {x_1, ..., x_m} the list is
    R(G \\ N[x_1])N(x_1), ..., R(G \\ N[x_m])N(x_m); the block order is x_1
    followed by its neighbors in ascending label order.
    """
    chooser = chooser or ChordalChooser()
    if not is_chordal(graph):
        raise ChordalityError("rooted lists are only defined for chordal graphs")
    for v in chooser.script:
        if not 1 <= v <= graph.n:
            raise ChooserScriptError(f"scripted label {v} outside 1..{graph.n}")

    trace: List[Tuple[int, ...]] = []

    def build(g: Graph) -> List[Exps]:
        if not g.has_edges:
            return [_unit(g.n)]
        pick = choose_simplicial(g, chooser)
        adj = g.adjacency()
        block = (pick,) + tuple(sorted(adj[pick]))
        trace.append(block)
        out: List[Exps] = []
        for x in block:
            factor = _neighbor_exps(g, adj, x)
            for u in build(delete_vertices(g, adj[x] | {x})):
                out.append(tuple(a + b for a, b in zip(u, factor)))
        return out

    exps = build(graph)
    if len(set(exps)) != len(exps):
        raise ConstructionIntegrityError(
            "rooted-list construction produced a repeated monomial; check the chooser script"
        )
    logger.debug("rooted list with %d generators from %d recursion steps", len(exps), len(trace))
    return GeneratorList(
        gens=tuple(Monomial(exps=e) for e in exps),
        provenance=Provenance.CHORDAL_ROOTED,
        universe=graph.n,
        trace=tuple(trace),
    )


def load_chooser(path_like: Union[str, Path]) -> ChordalChooser:
    """Read a chooser script: a JSON list of labels, or an object with
    ``strategy`` and optional ``script`` fields."""
    try:
        payload = json.loads(Path(path_like).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ChooserScriptError(f"cannot read chooser file {path_like}: {e}") from e
    try:
        if isinstance(payload, list):
            return ChordalChooser(strategy=ChooserStrategy.SCRIPT, script=tuple(int(v) for v in payload))
        return ChordalChooser(**payload)
    except (TypeError, ValueError) as e:
        raise ChooserScriptError(f"invalid chooser script: {e}") from e


def maximal_expression(m: Monomial, gens: GeneratorList, s: int) -> Optional[Expression]:
    """Lex-greatest count vector factoring ``m`` as an s-fold product.

    Greedy on a_1, a_2, ... with a feasibility look-ahead. For a residual
    and count k, ``last_start`` memoizes the largest index whose generator
    can open a factorization using only indices from there on; recursion
    depth is bounded by s.
    Returns None when ``m`` is not in F(I^s).
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if m.n != gens.universe:
        raise UniverseMismatchError(f"{m} does not live in {gens.universe} variables")
    rows = [g.exps for g in gens.gens]
    q = len(rows)

    def minus(residual: Exps, row: Exps, times: int) -> Optional[Exps]:
        out = tuple(a - times * b for a, b in zip(residual, row))
        return out if min(out, default=0) >= 0 else None

    @lru_cache(maxsize=None)
    def last_start(residual: Exps, k: int) -> int:
        for j in range(q - 1, -1, -1):
            rest = minus(residual, rows[j], 1)
            if rest is not None and feasible(rest, j, k - 1):
                return j
        return -1

    def feasible(residual: Exps, start: int, k: int) -> bool:
        if k == 0:
            return not any(residual)
        return start <= last_start(residual, k)

    if not feasible(m.exps, 0, s):
        return None

    counts = []
    residual, k = m.exps, s
    for i, row in enumerate(rows):
        a = 0
        while a < k and minus(residual, row, a + 1) is not None:
            a += 1
        while a >= 0:
            rest = minus(residual, row, a)
            if feasible(rest, i + 1, k - a):
                break
            a -= 1
        counts.append(a)
        residual = minus(residual, row, a)
        k -= a
    return Expression(counts=tuple(counts))


def _require_expression(m: Monomial, gens: GeneratorList, s: int) -> Expression:
    expression = maximal_expression(m, gens, s)
    if expression is None:
        raise NotInPowerError(f"{m} is not a {s}-fold product of the generator list")
    return expression


def compare_rooted(m: Monomial, other: Monomial, gens: GeneratorList, s: int) -> Ordering:
    a = _require_expression(m, gens, s).counts
    b = _require_expression(other, gens, s).counts
    if a == b:
        return Ordering.EQUAL
    return Ordering.GREATER if a > b else Ordering.LESS


def sort_rooted(monomials: MonomialSet, gens: GeneratorList, s: int) -> GeneratorList:
    """Elements of ``monomials`` in strictly decreasing rooted order."""
    keyed = [(_require_expression(m, gens, s).counts, m) for m in monomials]
    keyed.sort(key=lambda pair: pair[0], reverse=True)
    return GeneratorList(
        gens=tuple(m for _, m in keyed),
        provenance=Provenance.CUSTOM,
        universe=gens.universe,
        source=f"{gens.source}^{s}" if gens.source else None,
    )

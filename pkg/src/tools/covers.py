"""Brute-force minimal vertex covers: the ground truth for J(G)."""

import logging
from itertools import combinations
from typing import Optional

from ..config import default_budgets
from ..models.errors import NotSquarefreeError, SizeLimitError, UniverseMismatchError
from ..models.schemas import Graph, Monomial, MonomialSet

logger = logging.getLogger(__name__)


def is_cover(graph: Graph, m: Monomial) -> bool:
    if not m.is_squarefree:
        raise NotSquarefreeError(f"{m} is not squarefree")
    if m.n != graph.n:
        raise UniverseMismatchError(f"{m} does not live in the {graph.n} variables of the graph")
    chosen = set(m.support)
    return all(i in chosen or j in chosen for i, j in graph.edges)


def minimal_vertex_covers(graph: Graph, cap: Optional[int] = None) -> MonomialSet:
    """G(J(G)): inclusion-minimal vertex covers as squarefree monomials.

    Subsets are scanned by increasing size; any superset of a cover already
    found is skipped, so every cover that is recorded is minimal.
    """
    cap = cap if cap is not None else default_budgets().cover_cap
    if len(graph.vertices) > cap:
        raise SizeLimitError(
            f"cover enumeration refused: {len(graph.vertices)} vertices exceeds cap {cap}"
        )
    if not graph.has_edges:
        return frozenset({Monomial.one(graph.n)})

    # isolated vertices never belong to a minimal cover
    active = sorted({v for e in graph.edges for v in e})
    bit = {v: 1 << k for k, v in enumerate(active)}
    edge_masks = [bit[i] | bit[j] for i, j in graph.edges]

    found = []
    for size in range(1, len(active) + 1):
        for subset in combinations(active, size):
            mask = 0
            for v in subset:
                mask |= bit[v]
            if any(f & mask == f for f, _ in found):
                continue
            if all(mask & e for e in edge_masks):
                found.append((mask, subset))
    logger.debug("graph with %d edges has %d minimal covers", len(graph.edges), len(found))
    return frozenset(Monomial.from_support(subset, graph.n) for _, subset in found)

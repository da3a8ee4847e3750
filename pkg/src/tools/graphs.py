"""Simple graphs with stable 1-based labels, paths and chordality."""

import json
import logging
import random
from itertools import combinations
from pathlib import Path
from typing import Iterable, List, Set, Tuple, Union

import networkx as nx
from pydantic import ValidationError

from ..models.errors import GraphFormatError, VertexLabelError
from ..models.schemas import Graph

logger = logging.getLogger(__name__)


def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    try:
        return Graph(n=n, edges=list(edges))
    except ValidationError as e:
        raise GraphFormatError(f"invalid graph on {n} vertices: {e}") from e


def path(n: int) -> Graph:
    """P_n with edges {1,2}, ..., {n-1,n}."""
    if n < 1:
        raise ValueError("path needs at least one vertex; use empty_graph(0) for P_0")
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def empty_graph(n: int = 0) -> Graph:
    return from_edges(n, [])


def complete_graph(m: int) -> Graph:
    return from_edges(m, combinations(range(1, m + 1), 2))


def diamond() -> Graph:
    return from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def _check_labels(graph: Graph, labels: Iterable[int]) -> None:
    for v in labels:
        if v not in graph.vertices:
            raise VertexLabelError(f"vertex {v} is not in the graph (labels 1..{graph.n})")


def neighborhood(graph: Graph, v: int, closed: bool = False) -> Set[int]:
    _check_labels(graph, [v])
    nbrs = {j for i, j in graph.edges if i == v} | {i for i, j in graph.edges if j == v}
    if closed:
        nbrs.add(v)
    return nbrs


def delete_vertices(graph: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on the surviving vertices; labels are not compacted."""
    removed = set(removed)
    _check_labels(graph, removed)
    return Graph(
        n=graph.n,
        vertices=graph.vertices - removed,
        edges=[e for e in graph.edges if e[0] not in removed and e[1] not in removed],
    )


def _is_clique(adj, vertices) -> bool:
    return all(b in adj[a] for a, b in combinations(vertices, 2))


def simplicial_vertices(graph: Graph) -> List[int]:
    """Ascending vertices whose neighborhood is a clique (isolated ones included)."""
    adj = graph.adjacency()
    return sorted(v for v in graph.vertices if _is_clique(adj, sorted(adj[v])))


def perfect_elimination_order(graph: Graph) -> Union[List[int], None]:
    """Repeatedly delete the smallest simplicial vertex; None if stuck."""
    adj = {v: set(nbrs) for v, nbrs in graph.adjacency().items()}
    order = []
    while adj:
        pick = next(
            (v for v in sorted(adj) if _is_clique(adj, sorted(adj[v]))),
            None,
        )
        if pick is None:
            return None
        order.append(pick)
        for u in adj.pop(pick):
            adj[u].discard(pick)
    return order


def is_chordal(graph: Graph) -> bool:
    return perfect_elimination_order(graph) is not None


def clique_glued_chordal(n: int, seed: int, max_clique: int = 3) -> Graph:
    """Random chordal graph: each new vertex is glued onto a random clique.

    Vertex k (k >= 2) picks an existing vertex and joins a random subset of
    that vertex's earlier clique, so the insertion order reversed is a
    perfect elimination order.
    """
    rng = random.Random(seed)
    edges = []
    cliques = [[1]]
    for v in range(2, n + 1):
        base = rng.choice(cliques)
        size = rng.randint(1, min(len(base), max_clique))
        attach = sorted(rng.sample(base, size))
        edges.extend((u, v) for u in attach)
        cliques.append(attach + [v])
    logger.debug("clique-glued chordal graph n=%d seed=%d edges=%d", n, seed, len(edges))
    return from_edges(n, edges)


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(sorted(graph.vertices))
    g.add_edges_from(sorted(graph.edges))
    return g


def graph_to_payload(graph: Graph) -> dict:
    payload = {"n": graph.n, "edges": [list(e) for e in sorted(graph.edges)]}
    if graph.vertices != frozenset(range(1, graph.n + 1)):
        payload["vertices"] = sorted(graph.vertices)
    return payload


def dump_graph(graph: Graph) -> str:
    return json.dumps(graph_to_payload(graph))


def _graph_from_payload(payload: dict) -> Graph:
    if payload.get("generator") == "clique-gluing":
        return clique_glued_chordal(int(payload["n"]), int(payload["seed"]))
    if "n" not in payload:
        raise GraphFormatError("graph JSON needs an 'n' field")
    try:
        return Graph(
            n=int(payload["n"]),
            vertices=payload.get("vertices"),
            edges=payload.get("edges", []),
        )
    except (ValidationError, TypeError, ValueError) as e:
        raise GraphFormatError(f"invalid graph JSON: {e}") from e


def _graph_from_text(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            i, j = line.split()
            edges.append((int(i), int(j)))
    except ValueError as e:
        raise GraphFormatError(f"malformed plain-text graph: {e}") from e
    return from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"malformed graph JSON: {e}") from e
        return _graph_from_payload(payload)
    return _graph_from_text(text)


def load_graph(path_like: Union[str, Path]) -> Graph:
    file_path = Path(path_like)
    try:
        text = file_path.read_text()
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {file_path}: {e}") from e
    graph = parse_graph(text)
    logger.info("loaded graph %s: %d vertices, %d edges", file_path.name, len(graph.vertices), len(graph.edges))
    return graph

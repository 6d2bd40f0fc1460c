"""Weighted directed graphs with dense 1-based node ids."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Raised when graph input violates the construction rules."""


Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable digraph on nodes 1..n.

    ``edges`` holds at most one (src, dst, weight) per ordered pair, sorted
    by (src, dst). ``labels`` optionally names each node (index 0 is node 1).
    """

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def label(self, node: int) -> str:
        if self.labels is None:
            return str(node)
        return self.labels[node - 1]

    def node_labels(self) -> list[str]:
        return [self.label(i) for i in range(1, self.n + 1)]

    def successors(self, node: int) -> list[tuple[int, float]]:
        _check_node(self, node)
        return [(d, w) for s, d, w in self.edges if s == node]

    def predecessors(self, node: int) -> list[tuple[int, float]]:
        _check_node(self, node)
        return [(s, w) for s, d, w in self.edges if d == node]


def build_graph(
    n: int,
    edge_list: Iterable[tuple[int, int, float]],
    labels: Iterable[str] | None = None,
) -> WeightedDigraph:
    """Validate ``edge_list`` and aggregate parallel edges by summing weights."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise GraphError(f"node count must be an integer, got {n!r}")
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    n = int(n)

    totals: dict[tuple[int, int], float] = defaultdict(float)
    for k, edge in enumerate(edge_list, start=1):
        try:
            src, dst, weight = edge
        except (TypeError, ValueError):
            raise GraphError(f"edge {k}: expected (src, dst, weight), got {edge!r}") from None
        for end in (src, dst):
            if isinstance(end, bool) or not isinstance(end, (int, np.integer)):
                raise GraphError(f"edge {k} {edge!r}: endpoint {end!r} is not an integer")
            if not 1 <= end <= n:
                raise GraphError(f"edge {k} {edge!r}: endpoint {end} outside 1..{n}")
        weight = float(weight)
        if not weight > 0 or not np.isfinite(weight):
            raise GraphError(f"edge {k} {edge!r}: weight must be positive and finite")
        totals[(int(src), int(dst))] += weight

    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise GraphError("node labels must be unique")

    edges = tuple((s, d, w) for (s, d), w in sorted(totals.items()))
    return WeightedDigraph(n=n, edges=edges, labels=labels)


def _check_node(graph: WeightedDigraph, node: int) -> None:
    if not 1 <= node <= graph.n:
        raise GraphError(f"node {node} outside 1..{graph.n}")


def adjacency(graph: WeightedDigraph) -> np.ndarray:
    """Dense matrix L with L[i-1, j-1] = weight of edge i -> j."""
    mat = np.zeros((graph.n, graph.n))
    for s, d, w in graph.edges:
        mat[s - 1, d - 1] = w
    return mat


def transpose(graph: WeightedDigraph) -> WeightedDigraph:
    edges = sorted((d, s, w) for s, d, w in graph.edges)
    return WeightedDigraph(n=graph.n, edges=tuple(edges), labels=graph.labels)


def binarize(graph: WeightedDigraph) -> WeightedDigraph:
    """Same edge set with every weight set to 1."""
    edges = tuple((s, d, 1.0) for s, d, _ in graph.edges)
    return WeightedDigraph(n=graph.n, edges=edges, labels=graph.labels)


def scale_weights(graph: WeightedDigraph, factor: float) -> WeightedDigraph:
    if not factor > 0:
        raise GraphError(f"scale factor must be positive, got {factor}")
    edges = tuple((s, d, w * factor) for s, d, w in graph.edges)
    return WeightedDigraph(n=graph.n, edges=edges, labels=graph.labels)


def gram_products(graph: WeightedDigraph) -> tuple[np.ndarray, np.ndarray]:
    """Return (L^T L, L L^T) on the raw weights."""
    mat = adjacency(graph)
    return mat.T @ mat, mat @ mat.T


def in_degree(graph: WeightedDigraph, node: int) -> int:
    _check_node(graph, node)
    return sum(1 for _, d, _ in graph.edges if d == node)


def out_degree(graph: WeightedDigraph, node: int) -> int:
    _check_node(graph, node)
    return sum(1 for s, _, _ in graph.edges if s == node)


def degree_vectors(graph: WeightedDigraph) -> tuple[np.ndarray, np.ndarray]:
    """(in_degrees, out_degrees) as integer arrays indexed by node - 1."""
    ins = np.zeros(graph.n, dtype=int)
    outs = np.zeros(graph.n, dtype=int)
    for s, d, _ in graph.edges:
        outs[s - 1] += 1
        ins[d - 1] += 1
    return ins, outs


def relabel(graph: WeightedDigraph, perm: list[int]) -> WeightedDigraph:
    """Rename node i to perm[i-1]; ``perm`` is a permutation of 1..n."""
    if sorted(perm) != list(range(1, graph.n + 1)):
        raise GraphError("perm must be a permutation of 1..n")
    edges = [(perm[s - 1], perm[d - 1], w) for s, d, w in graph.edges]
    return build_graph(graph.n, edges)

"""Seeded generator of quasi-hierarchical networks.

A complete tree of managers and subordinates where every manager/subordinate
pair talks in both directions, the downward (manager -> subordinate) weight
always exceeding the upward one, plus a few random links that break the
hierarchy.
"""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .graph import WeightedDigraph, build_graph

MAX_RETRIES = 10_000


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    depth: int = 3
    branching: int = 3
    extra_links: int = 0
    down_weight_range: tuple[float, float] = (5.0, 10.0)
    up_weight_range: tuple[float, float] = (1.0, 4.0)
    extra_weight_range: tuple[float, float] = (1.0, 2.0)
    seed: int = 0

    def __post_init__(self):
        if self.depth < 1:
            raise GeneratorError(f"depth must be >= 1, got {self.depth}")
        if self.branching < 1:
            raise GeneratorError(f"branching must be >= 1, got {self.branching}")
        if self.extra_links < 0:
            raise GeneratorError(f"extra_links must be >= 0, got {self.extra_links}")
        for name in ("down_weight_range", "up_weight_range", "extra_weight_range"):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                raise GeneratorError(f"{name} must satisfy 0 < lo <= hi, got {(lo, hi)}")
            object.__setattr__(self, name, (float(lo), float(hi)))
        if not self.up_weight_range[1] < self.down_weight_range[0]:
            raise GeneratorError(
                "max(up_weight_range) must be below min(down_weight_range), got "
                f"{self.up_weight_range} vs {self.down_weight_range}"
            )

    @property
    def num_nodes(self) -> int:
        return sum(self.branching**k for k in range(self.depth + 1))

    def metadata(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GroundTruth:
    level: tuple[int, ...]  # level[i] is the depth of node i + 1, root = 0
    parent: tuple[int | None, ...]

    def reference_order(self) -> tuple[int, ...]:
        """Nodes by level, then by id: the root first."""
        return tuple(sorted(range(1, len(self.level) + 1), key=lambda v: (self.level[v - 1], v)))


@dataclass(frozen=True)
class GeneratedNetwork:
    graph: WeightedDigraph
    truth: GroundTruth
    tree_edges: tuple[tuple[int, int, float], ...]
    extra_edges: tuple[tuple[int, int, float], ...]
    config: GeneratorConfig

    def __iter__(self):
        return iter((self.graph, self.truth))


def generate(config: GeneratorConfig) -> GeneratedNetwork:
    n = config.num_nodes
    if config.extra_links > 0.2 * n:
        warnings.warn(
            f"{config.extra_links} extra links on {n} nodes exceeds 0.2*n; "
            "the network is no longer quasi-hierarchical",
            stacklevel=2,
        )
    # n(n-1)/2 unordered pairs, n-1 of them already used by the tree
    free_pairs = n * (n - 1) // 2 - (n - 1)
    if config.extra_links > free_pairs:
        raise GeneratorError(
            f"cannot place {config.extra_links} extra links: only {free_pairs} free node pairs"
        )

    rng = np.random.default_rng(config.seed)

    # breadth-first ids: children of node v are a contiguous block
    parent: list[int | None] = [None]
    level = [0]
    frontier = [1]
    for depth in range(1, config.depth + 1):
        nxt = []
        for v in frontier:
            for _ in range(config.branching):
                parent.append(v)
                level.append(depth)
                nxt.append(len(parent))
        frontier = nxt

    tree_edges = []
    for child in range(2, n + 1):
        boss = parent[child - 1]
        tree_edges.append((boss, child, float(rng.uniform(*config.down_weight_range))))
        tree_edges.append((child, boss, float(rng.uniform(*config.up_weight_range))))

    linked = {frozenset((s, d)) for s, d, _ in tree_edges}
    extra_edges = []
    retries = 0
    while len(extra_edges) < config.extra_links:
        s, d = (int(x) for x in rng.integers(1, n + 1, size=2))
        pair = frozenset((s, d))
        if s == d or pair in linked:
            retries += 1
            if retries > MAX_RETRIES:
                raise GeneratorError("too many collisions while placing extra links")
            continue
        linked.add(pair)
        extra_edges.append((s, d, float(rng.uniform(*config.extra_weight_range))))

    graph = build_graph(n, tree_edges + extra_edges)
    truth = GroundTruth(level=tuple(level), parent=tuple(parent))
    return GeneratedNetwork(graph, truth, tuple(tree_edges), tuple(extra_edges), config)

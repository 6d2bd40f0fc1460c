"""PageRank baseline."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import WeightedDigraph


class BaseConstant(str, enum.Enum):
    STANDARD = "standard"  # (1 - d) / n teleport term
    PAPER_LITERAL = "paper-literal"  # (1 + d) added to every node, then L1-normalized


class Dangling(str, enum.Enum):
    REDISTRIBUTE_UNIFORM = "uniform"
    SELF_ABSORB = "self"


@dataclass(frozen=True)
class PageRankConfig:
    damping: float = 0.85
    max_iter: int = 1000
    tolerance: float = 1e-12
    base_constant: BaseConstant = BaseConstant.STANDARD
    dangling: Dangling = Dangling.REDISTRIBUTE_UNIFORM
    weighted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "base_constant", BaseConstant(self.base_constant))
        object.__setattr__(self, "dangling", Dangling(self.dangling))
        if not 0 < self.damping < 1:
            raise ValueError(f"damping must lie in (0, 1), got {self.damping}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class PageRankResult:
    scores: np.ndarray
    iterations: int
    converged: bool
    config: PageRankConfig


def transition_matrix(graph: WeightedDigraph, weighted: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Column-stochastic link matrix M (M[i, j] = share of j's rank sent to i)
    plus a boolean mask of dangling nodes, whose columns are left zero."""
    n = graph.n
    mat = np.zeros((n, n))
    for s, d, w in graph.edges:
        mat[d - 1, s - 1] += w if weighted else 1.0
    col = mat.sum(axis=0)
    dangling = col == 0
    mat[:, ~dangling] /= col[~dangling]
    return mat, dangling


def pagerank(graph: WeightedDigraph, config: PageRankConfig | None = None, start=None) -> PageRankResult:
    if config is None:
        config = PageRankConfig()
    n = graph.n
    if n < 1:
        raise ValueError("pagerank needs at least one node")

    mat, dangling = transition_matrix(graph, config.weighted)
    if config.dangling is Dangling.SELF_ABSORB:
        idx = np.flatnonzero(dangling)
        mat[idx, idx] = 1.0
        dangling = np.zeros(n, dtype=bool)
    d = config.damping
    if config.base_constant is BaseConstant.STANDARD:
        teleport = (1.0 - d) / n
    else:
        teleport = 1.0 + d

    pr = np.full(n, 1.0 / n) if start is None else np.asarray(start, dtype=float)
    pr = pr / pr.sum()
    converged = False
    it = 0
    for it in range(1, config.max_iter + 1):
        nxt = teleport + d * (mat @ pr)
        if dangling.any():
            nxt += d * pr[dangling].sum() / n
        nxt /= nxt.sum()
        delta = np.abs(nxt - pr).max()
        pr = nxt
        if delta < config.tolerance:
            converged = True
            break
    return PageRankResult(pr / pr.sum(), it, converged, config)

"""Basic and weight-exponent HITS as a normalized power iteration.

Each iteration computes ``auth = W^T hub`` and then ``hub = W auth`` with the
freshly updated auth, where ``W[i, j] = weight(i -> j) ** alpha``. Repeating
this is the same as running the decoupled iterations ``auth <- W^T W auth``
and ``hub <- W W^T hub``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import WeightedDigraph

DEFAULT_ALPHA = 2 / 3


class Normalization(str, enum.Enum):
    L1 = "L1"
    NONE = "None"


@dataclass(frozen=True)
class HitsConfig:
    alpha: float = DEFAULT_ALPHA
    max_iter: int = 1000
    tolerance: float = 1e-9
    normalization: Normalization = Normalization.L1

    def __post_init__(self):
        alpha = float(self.alpha) if isinstance(self.alpha, Fraction) else self.alpha
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "normalization", Normalization(self.normalization))
        if not alpha >= 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class HitsResult:
    auth: np.ndarray
    hub: np.ndarray
    iterations: int
    converged: bool
    config: HitsConfig


def weight_matrix(graph: WeightedDigraph, alpha: float) -> np.ndarray:
    """Dense W with W[i-1, j-1] = weight(i -> j) ** alpha, 0 where no edge.

    For alpha == 0 existing edges contribute exactly 1, so the graph is
    binarized rather than completed.
    """
    mat = np.zeros((graph.n, graph.n))
    for s, d, w in graph.edges:
        mat[s - 1, d - 1] = 1.0 if alpha == 0 else w**alpha
    return mat


def hits_step(graph, auth_prev, hub_prev, alpha, *, _matrix=None):
    """One unnormalized update; the new auth feeds the hub update."""
    auth_prev = np.asarray(auth_prev, dtype=float)
    hub_prev = np.asarray(hub_prev, dtype=float)
    if auth_prev.shape != (graph.n,) or hub_prev.shape != (graph.n,):
        raise ValueError(
            f"score vectors must have length {graph.n}, "
            f"got {auth_prev.shape} and {hub_prev.shape}"
        )
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    mat = weight_matrix(graph, alpha) if _matrix is None else _matrix
    auth_next = mat.T @ hub_prev
    hub_next = mat @ auth_next
    return auth_next, hub_next


def _l1(v: np.ndarray) -> np.ndarray:
    total = v.sum()
    return v / total if total > 0 else v


def hits_rank(graph: WeightedDigraph, config: HitsConfig | None = None) -> HitsResult:
    if config is None:
        config = HitsConfig()
    if graph.n < 1:
        raise ValueError("hits_rank needs at least one node")

    mat = weight_matrix(graph, config.alpha)
    auth = np.ones(graph.n)
    hub = np.ones(graph.n)
    # convergence is always judged on L1-normalized views
    prev_a, prev_h = _l1(auth), _l1(hub)
    converged = False
    it = 0
    for it in range(1, config.max_iter + 1):
        auth, hub = hits_step(graph, auth, hub, config.alpha, _matrix=mat)
        if not auth.any() and not hub.any():
            return HitsResult(np.zeros(graph.n), np.zeros(graph.n), 1, True, config)
        cur_a, cur_h = _l1(auth), _l1(hub)
        if config.normalization is Normalization.L1:
            auth, hub = cur_a, cur_h
        delta = max(np.abs(cur_a - prev_a).max(), np.abs(cur_h - prev_h).max())
        prev_a, prev_h = cur_a, cur_h
        if delta < config.tolerance:
            converged = True
            break
    return HitsResult(auth, hub, it, converged, config)


def hits_basic(graph: WeightedDigraph, **kwargs) -> HitsResult:
    """Classic HITS on the adjacency matrix as given (alpha = 1)."""
    return hits_rank(graph, HitsConfig(alpha=1.0, **kwargs))

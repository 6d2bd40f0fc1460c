"""Fuse auth and hub with the F-measure and turn scores into orderings."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class RankKey(str, enum.Enum):
    AUTH = "auth"
    HUB = "hub"
    F = "f"
    PAGERANK = "pr"


def f_measure(auth: float, hub: float) -> float:
    """Harmonic mean of auth and hub; 0 if either is 0."""
    if auth < 0 or hub < 0:
        raise ValueError(f"scores must be nonnegative, got auth={auth}, hub={hub}")
    if auth == 0 or hub == 0:
        return 0.0
    lo, hi = (auth, hub) if auth <= hub else (hub, auth)
    # 2ab/(a+b) without forming 1/a or a*b, which misbehave for tiny scores
    return float(2.0 * lo / (1.0 + lo / hi))


def f_measure_vec(auth, hub) -> np.ndarray:
    auth = np.asarray(auth, dtype=float)
    hub = np.asarray(hub, dtype=float)
    return np.array([f_measure(a, h) for a, h in zip(auth, hub)])


def rank_nodes(scores) -> tuple[int, ...]:
    """1-based node ids by descending score, ties to the smaller id."""
    scores = np.asarray(scores, dtype=float)
    return tuple(int(i) + 1 for i in sorted(range(len(scores)), key=lambda i: (-scores[i], i)))


@dataclass(frozen=True)
class RankingResult:
    """Per-node score columns plus the total order they induce.

    Columns not produced by the algorithm (hub for PageRank, say) are None.
    """

    key: RankKey
    order: tuple[int, ...]
    auth: np.ndarray | None = None
    hub: np.ndarray | None = None
    f: np.ndarray | None = None
    pr: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.order)

    def columns(self) -> dict[str, np.ndarray]:
        cols = {"auth": self.auth, "hub": self.hub, "f": self.f, "pr": self.pr}
        return {k: v for k, v in cols.items() if v is not None}

    def ranks(self) -> np.ndarray:
        """rank[i] = 1-based position of node i + 1 in the order."""
        out = np.empty(self.n, dtype=int)
        for pos, node in enumerate(self.order, start=1):
            out[node - 1] = pos
        return out


def ranking_from_hits(result, key: RankKey | str = RankKey.F) -> RankingResult:
    key = RankKey(key)
    if key is RankKey.PAGERANK:
        raise ValueError("HITS results cannot be ranked by PageRank")
    f = f_measure_vec(result.auth, result.hub)
    cols = {"auth": result.auth, "hub": result.hub, "f": f}
    return RankingResult(key=key, order=rank_nodes(cols[key.value]), **cols)


def ranking_from_pagerank(scores) -> RankingResult:
    scores = np.asarray(scores, dtype=float)
    return RankingResult(key=RankKey.PAGERANK, order=rank_nodes(scores), pr=scores)

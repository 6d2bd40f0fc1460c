"""Agreement between a computed ranking and a reference ranking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence


class RankingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    kendall_tau: float
    exact_matches: int
    top_k_overlap: dict[int, float] = field(default_factory=dict)


def check_permutation(order: Sequence[Hashable], name: str = "ranking") -> None:
    seen = set()
    dups = []
    for node in order:
        if node in seen:
            dups.append(node)
        seen.add(node)
    if dups:
        raise RankingMismatch(f"{name} repeats node(s): {', '.join(map(str, dups))}")


def _check_same_nodes(a: Sequence[Hashable], b: Sequence[Hashable]) -> None:
    check_permutation(a, "first ranking")
    check_permutation(b, "second ranking")
    sa, sb = set(a), set(b)
    if sa != sb:
        only_a = sorted(map(str, sa - sb))
        only_b = sorted(map(str, sb - sa))
        raise RankingMismatch(
            f"node sets differ: only in first {only_a}, only in second {only_b}"
        )


def kendall_tau(a: Sequence[Hashable], b: Sequence[Hashable]) -> float:
    """Tau-a between two strict orders over the same nodes (best first)."""
    _check_same_nodes(a, b)
    n = len(a)
    if n < 2:
        return 1.0
    pos_b = {node: i for i, node in enumerate(b)}
    seq = [pos_b[node] for node in a]
    # a ranks seq[i] before seq[j] for i < j; concordant iff b agrees
    net = 0
    for i in range(n):
        si = seq[i]
        for j in range(i + 1, n):
            net += 1 if seq[j] > si else -1
    return net / (n * (n - 1) / 2)


def compare_rankings(computed, reference: Sequence[Hashable], ks: Sequence[int] = ()) -> ComparisonReport:
    """``computed`` is a RankingResult or any node sequence, best first."""
    order = list(getattr(computed, "order", computed))
    reference = list(reference)
    _check_same_nodes(order, reference)
    n = len(order)
    overlaps = {}
    for k in ks:
        if not 1 <= k <= n:
            raise RankingMismatch(f"k={k} outside 1..{n}")
        overlaps[k] = len(set(order[:k]) & set(reference[:k])) / k
    exact = sum(1 for x, y in zip(order, reference) if x == y)
    return ComparisonReport(
        n=n,
        kendall_tau=kendall_tau(order, reference),
        exact_matches=exact,
        top_k_overlap=overlaps,
    )

"""Node ranking for weighted, quasi-hierarchical directed networks."""

from .combine import RankingResult, RankKey, f_measure, rank_nodes, ranking_from_hits, ranking_from_pagerank
from .compare import ComparisonReport, compare_rankings, kendall_tau
from .graph import (
    WeightedDigraph,
    adjacency,
    build_graph,
    gram_products,
    in_degree,
    out_degree,
    transpose,
)
from .hits import HitsConfig, HitsResult, Normalization, hits_basic, hits_rank, hits_step
from .netgen import GeneratorConfig, GroundTruth, generate
from .pagerank import PageRankConfig, pagerank

__version__ = "0.1.0"

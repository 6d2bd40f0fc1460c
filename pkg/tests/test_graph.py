import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIG1_EDGES, FIG1_L
from oracles import random_graph
from qhrank.graph import (
    GraphError,
    adjacency,
    build_graph,
    degree_vectors,
    gram_products,
    in_degree,
    out_degree,
    transpose,
)


@st.composite
def graphs(draw, max_n=20, unit=False):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return build_graph(0, [])
    if unit:
        pairs = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=3 * n))
        return build_graph(n, [(s, d, 1.0) for s, d in pairs])
    weight = st.floats(0.01, 100, allow_nan=False)
    edges = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n), weight), max_size=3 * n))
    return build_graph(n, edges)


def test_fig1_adjacency_matches_L(fig1):
    np.testing.assert_array_equal(adjacency(fig1), np.array(FIG1_L, dtype=float))


def test_empty_graph():
    g = build_graph(0, [])
    assert adjacency(g).shape == (0, 0)
    a, h = gram_products(g)
    assert a.shape == h.shape == (0, 0)
    assert transpose(g) == g


def test_single_isolated_node():
    g = build_graph(1, [])
    np.testing.assert_array_equal(adjacency(g), [[0.0]])
    assert in_degree(g, 1) == out_degree(g, 1) == 0


def test_parallel_edges_aggregate():
    g = build_graph(2, [(1, 2, 3), (1, 2, 4)])
    assert g.edges == ((1, 2, 7.0),)


def test_edges_sorted_by_pair():
    g = build_graph(3, [(3, 1, 1), (1, 3, 2), (1, 2, 1)])
    assert [(s, d) for s, d, _ in g.edges] == [(1, 2), (1, 3), (3, 1)]


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (-1, [], "nonnegative"),
        (3, [(1, 4, 1)], "edge 1"),
        (3, [(1, 2, 1), (0, 2, 1)], "edge 2"),
        (3, [(1, 2, 0)], "positive"),
        (3, [(1, 2, -2.5)], "positive"),
    ],
)
def test_build_graph_rejects(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment):
        build_graph(n, edges)


def test_self_loop_kept():
    g = build_graph(2, [(1, 1, 2.0)])
    assert adjacency(g)[0, 0] == 2.0


def test_fig1_transpose_matches_LT(fig1):
    expected = np.array(FIG1_L, dtype=float).T
    np.testing.assert_array_equal(adjacency(transpose(fig1)), expected)
    for i, j in [(5, 1), (4, 2), (3, 5), (1, 6), (5, 4)]:
        assert expected[i - 1, j - 1] == 1


def test_transpose_involution_random():
    rng = np.random.default_rng(3)
    g = build_graph(10, random_graph(rng, 10))
    assert transpose(transpose(g)) == g


def test_fig1_gram_products(fig1):
    auth_gram, hub_gram = gram_products(fig1)
    np.testing.assert_array_equal(auth_gram, np.diag([1.0, 0, 1, 1, 2, 0]))
    expected_hub = np.diag([1.0, 1, 0, 1, 1, 1])
    expected_hub[0, 3] = expected_hub[3, 0] = 1
    np.testing.assert_array_equal(hub_gram, expected_hub)


def test_fig1_degrees(fig1):
    assert in_degree(fig1, 5) == 2
    assert out_degree(fig1, 5) == 1


def test_two_cycle_degrees():
    g = build_graph(2, [(1, 2, 5), (2, 1, 5)])
    for v in (1, 2):
        assert in_degree(g, v) == out_degree(g, v) == 1


def test_degree_out_of_range(fig1):
    with pytest.raises(GraphError):
        in_degree(fig1, 7)
    with pytest.raises(GraphError):
        out_degree(fig1, 0)


@given(graphs())
def test_adjacency_of_transpose_is_transposed(g):
    np.testing.assert_array_equal(adjacency(transpose(g)), adjacency(g).T)


@settings(max_examples=60)
@given(graphs(unit=True))
def test_gram_diagonal_counts_degrees(g):
    auth_gram, hub_gram = gram_products(g)
    for v in range(1, g.n + 1):
        # brute force: count edges into / out of v
        ins = sum(1 for s, d, _ in g.edges if d == v)
        outs = sum(1 for s, d, _ in g.edges if s == v)
        assert auth_gram[v - 1, v - 1] == ins == in_degree(g, v)
        assert hub_gram[v - 1, v - 1] == outs == out_degree(g, v)


@given(graphs())
def test_degree_sums_equal_edge_count(g):
    ins, outs = degree_vectors(g)
    assert ins.sum() == outs.sum() == g.num_edges
    assert g.num_edges == len({(s, d) for s, d, _ in g.edges})

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIG1_EDGES
from oracles import dense_weights, eigen_gap, gram_power, random_graph
from qhrank.graph import binarize, build_graph, scale_weights
from qhrank.hits import HitsConfig, Normalization, hits_basic, hits_rank, hits_step, weight_matrix

ALPHAS = [0.0, 0.4, 2 / 3, 1.0, 1.5]


@st.composite
def weighted_graphs(draw, max_n=8, unit=False):
    n = draw(st.integers(1, max_n))
    pairs = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=3 * n))
    if unit:
        return build_graph(n, [(s, d, 1.0) for s, d in sorted(pairs)])
    ws = draw(st.lists(st.floats(1, 10), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(s, d, w) for (s, d), w in zip(sorted(pairs), ws)])


def test_fig1_first_step_is_exact(fig1):
    auth, hub = hits_step(fig1, np.ones(6), np.ones(6), 1.0)
    assert auth.tolist() == [1, 0, 1, 1, 2, 0]
    assert hub.tolist() == [2, 1, 0, 2, 1, 1]


def test_two_node_exponent_step():
    # 8 ** (2/3) == 4; auth = W^T 1, hub = W auth
    g = build_graph(2, [(1, 2, 8)])
    auth, hub = hits_step(g, np.ones(2), np.ones(2), 2 / 3)
    np.testing.assert_allclose(auth, [0, 4], atol=1e-12)
    np.testing.assert_allclose(hub, [16, 0], atol=1e-12)
    w = dense_weights(2, [(1, 2, 8)], 2 / 3)
    np.testing.assert_allclose(auth, w.T @ np.ones(2), atol=1e-12)
    np.testing.assert_allclose(hub, w @ (w.T @ np.ones(2)), atol=1e-12)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_zero_hub_gives_zero(alpha):
    rng = np.random.default_rng(1)
    g = build_graph(6, random_graph(rng, 6))
    auth, hub = hits_step(g, np.ones(6), np.zeros(6), alpha)
    assert not auth.any() and not hub.any()


def test_step_rejects_bad_length(fig1):
    with pytest.raises(ValueError, match="length 6"):
        hits_step(fig1, np.ones(5), np.ones(6), 1.0)


def test_alpha_zero_binarizes_not_completes():
    g = build_graph(3, [(1, 2, 5.0)])
    np.testing.assert_array_equal(weight_matrix(g, 0.0), [[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_fig1_converged_scores_match_explicit_iteration(fig1):
    res = hits_rank(fig1, HitsConfig(alpha=1.0))
    assert res.converged
    # oracle: 100 explicit multiplications by the gram matrices
    a, h, _ = gram_power(6, FIG1_EDGES, 1.0, steps=100)
    np.testing.assert_allclose(a, [0, 0, 0, 0, 1, 0], atol=1e-12)
    np.testing.assert_allclose(h, [0.5, 0, 0, 0.5, 0, 0], atol=1e-12)
    np.testing.assert_allclose(res.auth, a, atol=1e-8)
    np.testing.assert_allclose(res.hub, h, atol=1e-8)


def test_edgeless_graph_short_circuits():
    res = hits_rank(build_graph(5, []))
    assert res.converged and res.iterations == 1
    assert not res.auth.any() and not res.hub.any()


def test_hits_rank_needs_a_node():
    with pytest.raises(ValueError):
        hits_rank(build_graph(0, []))


def test_max_iter_reports_non_convergence(fig1):
    res = hits_rank(fig1, HitsConfig(alpha=1.0, max_iter=3))
    assert not res.converged and res.iterations == 3


def test_unnormalized_mode_keeps_raw_scale(fig1):
    res = hits_rank(fig1, HitsConfig(alpha=1.0, max_iter=4, normalization="None"))
    # auth after k steps is (W^T W)^(k-1) W^T 1 = (1, 0, 1, 1, 2^k, 0)
    np.testing.assert_array_equal(res.auth, [1, 0, 1, 1, 16, 0])


@pytest.mark.parametrize(
    "kwargs", [dict(alpha=-0.1), dict(tolerance=0), dict(max_iter=0), dict(normalization="L2")]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        HitsConfig(**kwargs)


def test_default_alpha_is_two_thirds():
    assert HitsConfig().alpha == pytest.approx(2 / 3, abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(weighted_graphs(), st.sampled_from(ALPHAS))
def test_l1_normalized_and_nonnegative(g, alpha):
    res = hits_rank(g, HitsConfig(alpha=alpha))
    assert (res.auth >= 0).all() and (res.hub >= 0).all()
    if g.num_edges:
        assert abs(res.auth.sum() - 1) < 1e-12
        assert abs(res.hub.sum() - 1) < 1e-12


@settings(max_examples=50, deadline=None)
@given(weighted_graphs(unit=True), st.sampled_from(ALPHAS), st.sampled_from(ALPHAS))
def test_alpha_irrelevant_on_unit_weights(g, a1, a2):
    r1 = hits_rank(g, HitsConfig(alpha=a1))
    r2 = hits_rank(g, HitsConfig(alpha=a2))
    np.testing.assert_allclose(r1.auth, r2.auth, rtol=0, atol=1e-12)
    np.testing.assert_allclose(r1.hub, r2.hub, rtol=0, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(weighted_graphs(), st.sampled_from(ALPHAS), st.floats(0.01, 100))
def test_uniform_weight_scaling_is_invisible(g, alpha, c):
    r1 = hits_rank(g, HitsConfig(alpha=alpha))
    r2 = hits_rank(scale_weights(g, c), HitsConfig(alpha=alpha))
    np.testing.assert_allclose(r1.auth, r2.auth, rtol=0, atol=1e-9)
    np.testing.assert_allclose(r1.hub, r2.hub, rtol=0, atol=1e-9)


@settings(max_examples=50, deadline=None)
@given(weighted_graphs())
def test_alpha_zero_is_basic_hits_on_binarized_graph(g):
    r0 = hits_rank(g, HitsConfig(alpha=0.0))
    rb = hits_basic(binarize(g))
    np.testing.assert_allclose(r0.auth, rb.auth, rtol=0, atol=1e-12)
    np.testing.assert_allclose(r0.hub, rb.hub, rtol=0, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(weighted_graphs(), st.sampled_from(ALPHAS))
def test_every_iterate_is_nonnegative(g, alpha):
    auth = hub = np.ones(g.n)
    for _ in range(10):
        auth, hub = hits_step(g, auth, hub, alpha)
        assert (auth >= 0).all() and (hub >= 0).all()
        auth = auth / auth.sum() if auth.sum() else auth
        hub = hub / hub.sum() if hub.sum() else hub


def test_matches_exact_dominant_eigenvector_when_gap_is_wide():
    """Against numpy's symmetric eigensolver, where power iteration is
    guaranteed to have settled (second/first eigenvalue ratio <= 0.9)."""
    rng = np.random.default_rng(11)
    checked = 0
    for k in range(200):
        n = int(rng.integers(2, 9))
        alpha = ALPHAS[k % len(ALPHAS)]
        edges = random_graph(rng, n)
        if not edges:
            continue
        w = dense_weights(n, edges, alpha)
        vals, vecs = np.linalg.eigh(w.T @ w)
        if vals[-2] > 0.9 * vals[-1]:
            continue
        top = np.abs(vecs[:, -1])
        res = hits_rank(build_graph(n, edges), HitsConfig(alpha=alpha))
        assert res.converged
        np.testing.assert_allclose(res.auth, top / top.sum(), atol=1e-7)
        checked += 1
    assert checked > 100


def test_eigen_gap_helper_on_diagonal():
    assert eigen_gap(np.diag([1.0, 3.0, 2.0])) == pytest.approx(1.0)

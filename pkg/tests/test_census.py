import numpy as np
import pytest

from trigauge import (
    CapacityError,
    UndefinedCoefficientError,
    UndefinedStatisticError,
    approx_triangle_count,
    build_graph,
    gen_er,
    global_clustering,
    local_clustering,
    mean_local_clustering,
    spectral_gcc_oracle,
    triangle_census,
    wedge_count,
)
from trigauge.census import _forward_merge_count

from conftest import (
    brute_force_triangles,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    star_graph,
)


class TestTriangleCensus:
    def test_k4(self, k4):
        census = triangle_census(k4)
        assert census.per_node.tolist() == [3, 3, 3, 3]
        assert census.total_triangles == 4
        assert census.wedge_count == 12

    def test_five_cycle(self, c5):
        census = triangle_census(c5)
        assert census.total_triangles == 0
        assert census.wedge_count == 5

    def test_matches_brute_force_fixed_graph(self):
        # spec example: G(n=50, p=0.2) -> mean degree 0.2 * 49
        g = gen_er(50, 0.2 * 49, seed=1234)
        census = triangle_census(g)
        per_node, total = brute_force_triangles(g)
        assert census.total_triangles == total
        assert np.array_equal(census.per_node, per_node)

    def test_python_kernel_agrees_with_compiled(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            n = int(rng.integers(2, 40))
            g, _ = build_graph(rng.integers(0, n, size=(3 * n, 2)), node_count=n)
            fast = triangle_census(g)
            slow = triangle_census(g, kernel=_forward_merge_count)
            assert fast.total_triangles == slow.total_triangles
            assert np.array_equal(fast.per_node, slow.per_node)

    def test_census_invariants_random(self):
        rng = np.random.default_rng(40)
        for _ in range(25):
            n = int(rng.integers(1, 60))
            g, _ = build_graph(rng.integers(0, n, size=(4 * n, 2)), node_count=n)
            census = triangle_census(g)
            deg = g.degrees
            assert int(census.per_node.sum()) == 3 * census.total_triangles
            assert np.all(census.per_node <= deg * (deg - 1) // 2)
            # wedge identity, multiply-through integer form
            s1 = int(deg.sum())
            s2 = int((deg.astype(np.int64) ** 2).sum())
            assert 2 * census.wedge_count == s2 - s1

    def test_wedge_count_empty(self):
        assert wedge_count(np.array([], dtype=np.int64)) == 0


class TestLocalClustering:
    def test_k4_all_one(self, k4):
        values = local_clustering(k4, triangle_census(k4))
        assert np.allclose(values, 1.0)

    def test_star_convention(self):
        g = star_graph(4)
        values = local_clustering(g, triangle_census(g))
        assert np.allclose(values, 0.0)  # hub has wedges but no triangles, leaves k<2

    def test_pendant_corner(self):
        # triangle 0-1-2 plus pendant node 3 on node 0: the three wedges at
        # node 0 are {1,2}, {1,3}, {2,3}; only {1,2} is closed
        g = graph_from_edges([(0, 1), (1, 2), (0, 2), (0, 3)])
        values = local_clustering(g, triangle_census(g))
        assert values[0] == pytest.approx(1 / 3)
        assert values[1] == pytest.approx(1.0)
        assert values[2] == pytest.approx(1.0)
        assert values[3] == 0.0

    def test_bounds(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            n = int(rng.integers(2, 50))
            g, _ = build_graph(rng.integers(0, n, size=(3 * n, 2)), node_count=n)
            values = local_clustering(g, triangle_census(g))
            assert np.all((values >= 0.0) & (values <= 1.0))


class TestMeanLocalClustering:
    def test_k4(self, k4):
        assert mean_local_clustering(local_clustering(k4, triangle_census(k4))) == 1.0

    def test_five_cycle(self, c5):
        assert mean_local_clustering(local_clustering(c5, triangle_census(c5))) == 0.0

    def test_k4_plus_isolated(self):
        g = graph_from_edges([(i, j) for i in range(4) for j in range(i + 1, 4)], n=5)
        assert mean_local_clustering(local_clustering(g, triangle_census(g))) == pytest.approx(4 / 5)

    def test_empty_rejected(self):
        with pytest.raises(UndefinedStatisticError):
            mean_local_clustering([])


class TestGlobalClustering:
    def test_k4(self, k4):
        assert global_clustering(triangle_census(k4)) == 1.0

    def test_star(self):
        assert global_clustering(triangle_census(star_graph(7))) == 0.0

    def test_no_wedges_rejected(self):
        g = graph_from_edges([(0, 1)])
        with pytest.raises(UndefinedCoefficientError):
            global_clustering(triangle_census(g))

    def test_in_unit_interval(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            n = int(rng.integers(3, 60))
            g, _ = build_graph(rng.integers(0, n, size=(4 * n, 2)), node_count=n)
            census = triangle_census(g)
            if census.wedge_count:
                assert 0.0 <= global_clustering(census) <= 1.0


class TestWedgeSampling:
    def test_k4_every_wedge_closed(self, k4):
        for seed in (0, 1, 99):
            est = approx_triangle_count(k4, 500, seed=seed)
            assert est.closure_rate == 1.0
            assert est.estimate == pytest.approx(4.0)
            assert est.std_error == 0.0

    def test_five_cycle_estimates_zero(self, c5):
        est = approx_triangle_count(c5, 400, seed=3)
        assert est.estimate == 0.0

    def test_no_wedges_rejected(self):
        with pytest.raises(UndefinedCoefficientError):
            approx_triangle_count(graph_from_edges([(0, 1)]), 10, seed=0)

    def test_bad_sample_size(self, k4):
        with pytest.raises(ValueError):
            approx_triangle_count(k4, 0, seed=0)

    def test_unbiased_over_seeds(self):
        # estimator mean over 1000 sampling seeds within 3 standard errors
        g = gen_er(300, 12.0, seed=9)
        exact = triangle_census(g).total_triangles
        estimates = np.array([approx_triangle_count(g, 2000, seed=s).estimate for s in range(1000)])
        se = estimates.std(ddof=1) / np.sqrt(estimates.size)
        assert abs(estimates.mean() - exact) <= 3 * se

    def test_reported_error_matches_spread(self):
        g = gen_er(400, 10.0, seed=5)
        estimates = [approx_triangle_count(g, 4000, seed=s) for s in range(200)]
        spread = np.std([e.estimate for e in estimates], ddof=1)
        typical_reported = np.median([e.std_error for e in estimates])
        assert typical_reported == pytest.approx(spread, rel=0.25)


class TestSpectralOracle:
    def test_k4(self, k4):
        # eigenvalues {3, -1, -1, -1}: third-moment mean 6 over moment gap 6
        assert spectral_gcc_oracle(k4) == pytest.approx(1.0, abs=1e-12)

    def test_five_cycle(self, c5):
        assert spectral_gcc_oracle(c5) == pytest.approx(0.0, abs=1e-12)

    def test_identity_fixed_graph(self):
        g = gen_er(100, 0.1 * 99, seed=77)
        census = triangle_census(g)
        assert abs(spectral_gcc_oracle(g) - global_clustering(census)) <= 1e-10

    def test_identity_random_graphs(self):
        rng = np.random.default_rng(8)
        for _ in range(40):
            n = int(rng.integers(3, 200))
            g, _ = build_graph(rng.integers(0, n, size=(3 * n, 2)), node_count=n)
            census = triangle_census(g)
            if census.wedge_count == 0:
                continue
            assert abs(spectral_gcc_oracle(g) - global_clustering(census)) <= 1e-10

    def test_cap(self):
        g = gen_er(50, 3.0, seed=0)
        with pytest.raises(CapacityError):
            spectral_gcc_oracle(g, dense_cap=10)

    def test_degenerate_moments(self):
        with pytest.raises(UndefinedCoefficientError):
            spectral_gcc_oracle(graph_from_edges([(0, 1)]))

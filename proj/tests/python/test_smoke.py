import math

import numpy as np
import pytest

import graphwalk as gw


@pytest.fixture(scope="module")
def grid():
    g = gw.grid_graph(6, 6)
    basis = gw.eigendecompose(gw.laplacian(g))
    fn = gw.synth_smooth(basis, 4, 11)
    return g, basis, fn


def test_graph_basics(grid):
    g, _, _ = grid
    assert g.n == 36
    assert g.edge_count() == 60
    assert g.d_max == 4
    assert gw.diameter(g) == 10
    assert g.has_edge(0, 1) and not g.has_edge(0, 7)


def test_generators_deterministic():
    a = gw.erdos_renyi(60, 0.15, 5)
    b = gw.erdos_renyi(60, 0.15, 5)
    assert gw.save_graph(a) == gw.save_graph(b)
    ba = gw.barabasi_albert(50, 2, 3)
    assert ba.edge_count() == 1 + 2 * 48


def test_graph_io_round_trip(tmp_path, grid):
    g, _, _ = grid
    path = str(tmp_path / "g.txt")
    gw.save_graph_file(g, path)
    h = gw.load_graph_file(path)
    assert gw.save_graph(h) == gw.save_graph(g)


def test_spectral(grid):
    g, basis, fn = grid
    assert basis.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
    U = np.asarray(basis.eigenvectors)
    assert np.abs(U.T @ U - np.eye(g.n)).max() < 1e-8
    coh = gw.coherence_profile(basis, 4)
    assert np.asarray(coh.c).shape == (g.n,)
    assert sum(c * c for c in np.asarray(coh.c)) == pytest.approx(4.0)
    d = gw.decompose(np.asarray(fn.values), basis, 4)
    assert d.eps_min == pytest.approx(0.0, abs=1e-10)


def test_function_io_round_trip(tmp_path, grid):
    _, _, fn = grid
    path = str(tmp_path / "f.csv")
    gw.save_function_file(np.asarray(fn.values), path)
    back = gw.load_function_file(path)
    assert np.array_equal(np.asarray(back), np.asarray(fn.values))


def test_targets(grid):
    _, _, fn = grid
    f = np.asarray(fn.values)
    t = gw.exponential_density(f, 1.0)
    assert np.asarray(t.p).sum() == pytest.approx(1.0)
    s = gw.squared_density(f)
    assert np.argmax(np.asarray(s.p)) == np.argmax(f)
    with pytest.raises(ValueError):
        gw.exponential_density(f, -1.0)


def test_kernels_and_walks(grid):
    g, basis, fn = grid
    f = np.asarray(fn.values)
    coh = gw.coherence_profile(basis, 4)
    for kernel in (
        gw.WalkKernel.vanilla(g, f),
        gw.WalkKernel.exponential(g, f, 1.0),
        gw.WalkKernel.laplacian(g, f, coh),
        gw.WalkKernel.laplacian(g, f, coh, eps=0.1),
    ):
        assert gw.detailed_balance_gap(kernel) < 1e-12
        row = kernel.row(0)
        assert sum(row.prob) + row.self_prob == pytest.approx(1.0)
        trace = gw.run_walk(kernel, 500, seed=9)
        assert len(trace.path) == 501
        assert trace.f_max == pytest.approx(f[trace.i_max])
    # determinism
    a = gw.run_walk(gw.WalkKernel.vanilla(g, f), 100, seed=4)
    b = gw.run_walk(gw.WalkKernel.vanilla(g, f), 100, seed=4)
    assert a.path == b.path


def test_oracles_and_bounds(grid):
    g, basis, fn = grid
    f = np.asarray(fn.values)
    kernel = gw.WalkKernel.exponential(g, f, 0.5)
    P = np.asarray(gw.dense_kernel(kernel))
    assert np.abs(P.sum(axis=1) - 1.0).max() < 1e-12
    pi = np.asarray(gw.stationary_distribution(P))
    assert gw.tv_distance(pi, np.asarray(kernel.target().p)) < 1e-8
    inp = gw.bound_inputs(kernel, gw.diameter(g))
    curve = gw.exact_tv_curve(P, np.asarray(kernel.target().p), 50)
    for t, tv in enumerate(curve):
        assert tv <= gw.tv_bound_exponential(inp, t) + 1e-12
    hit = gw.exact_expected_hitting(P, gw.argmax_set(f))
    assert hit.max_over_starts <= gw.hitting_bound_exponential(inp) + 1e-9
    assert gw.dominance_M(5, 100, 0.0) == 5.0


def test_bench_and_plot(grid):
    g, basis, _ = grid
    cfg = gw.ExperimentConfig()
    cfg.ks = [3]
    cfg.functions = 2
    cfg.trials = 5
    cfg.step_cap = 2000
    cfg.master_seed = 1
    rows = gw.run_bench(g, "grid", basis, cfg)
    assert len(rows) == 4 * 2 * 5
    csv = gw.results_to_csv(rows)
    assert csv == gw.results_to_csv(gw.run_bench(g, "grid", basis, cfg))
    assert gw.results_to_csv(gw.results_from_csv(csv)) == csv
    summary = gw.summarize(rows)
    assert sum(s.count for s in summary) == len(rows)
    svgs = gw.plot_results(rows)
    assert svgs["grid"].startswith("<svg")

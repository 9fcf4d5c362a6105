#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphwalk/analysis.hpp"
#include "graphwalk/graph.hpp"
#include "graphwalk/rng.hpp"
#include "graphwalk/spectral.hpp"
#include "graphwalk/walkers.hpp"

using namespace graphwalk;

namespace {

Graph path3() { return load_graph("0 1\n1 2"); }

double row_sum(const KernelRow& r) {
    double s = r.self_prob;
    for (double p : r.prob) s += p;
    return s;
}

void check_row_invariants(const WalkKernel& kernel) {
    const Graph& g = kernel.graph();
    for (int i = 0; i < g.n; ++i) {
        KernelRow r = kernel.row(i);
        CHECK(r.neighbors == g.adj[i]);
        CHECK(r.self_prob >= 0.0);
        CHECK(r.self_prob <= 1.0);
        for (double p : r.prob) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
        CHECK(std::abs(row_sum(r) - 1.0) < 1e-12);
    }
}

}  // namespace

TEST_CASE("vanilla rows") {
    Graph g = path3();
    Eigen::VectorXd f(3);
    f << 1, 2, 3;
    WalkKernel k = WalkKernel::vanilla(g, f);
    KernelRow mid = k.row(1);
    CHECK(mid.prob[0] == doctest::Approx(0.5));
    CHECK(mid.prob[1] == doctest::Approx(0.5));
    CHECK(mid.self_prob == 0.0);
    KernelRow end = k.row(0);
    CHECK(end.prob[0] == doctest::Approx(1.0));

    Graph k4 = erdos_renyi(4, 1.0, 0);
    WalkKernel kv = WalkKernel::vanilla(k4, Eigen::VectorXd::Ones(4));
    for (double p : kv.row(2).prob) CHECK(p == doctest::Approx(1.0 / 3));
}

TEST_CASE("exponential rows") {
    Graph g = path3();
    Eigen::VectorXd f(3);
    f << 1, 2, 3;
    WalkKernel k = WalkKernel::exponential(g, f, 1.0);
    KernelRow mid = k.row(1);
    CHECK(mid.prob[0] == doctest::Approx(0.5 * std::exp(-1.0) * 2.0));
    CHECK(mid.prob[1] == doctest::Approx(0.5));
    CHECK(mid.self_prob == doctest::Approx(1.0 - 0.5 - std::exp(-1.0)));

    SUBCASE("gamma 0 on a regular graph equals vanilla") {
        Graph cycle = grid_graph(2, 2);
        Eigen::VectorXd h(4);
        h << 3, 1, 4, 1;
        WalkKernel e = WalkKernel::exponential(cycle, h, 0.0);
        WalkKernel v = WalkKernel::vanilla(cycle, h);
        for (int i = 0; i < 4; ++i) {
            KernelRow re = e.row(i), rv = v.row(i);
            for (std::size_t a = 0; a < re.prob.size(); ++a)
                CHECK(re.prob[a] == doctest::Approx(rv.prob[a]));
        }
    }
    SUBCASE("uphill moves between equal degrees run at full proposal rate") {
        Graph cycle = grid_graph(2, 2);
        Eigen::VectorXd h(4);
        h << 1, 2, 3, 4;
        WalkKernel e = WalkKernel::exponential(cycle, h, 2.0);
        KernelRow r = e.row(0);  // neighbors 1 and 2, both uphill
        for (double p : r.prob) CHECK(p == doctest::Approx(0.5));
    }
    SUBCASE("greedy limit never steps downhill") {
        Graph g2 = erdos_renyi(16, 0.4, 2);
        SpectralBasis b = eigendecompose(laplacian(g2));
        GraphFunction fn = synth_smooth(b, 4, 1);
        WalkKernel e = WalkKernel::exponential(g2, fn.values, 1e3);
        for (int i = 0; i < g2.n; ++i) {
            KernelRow r = e.row(i);
            for (std::size_t a = 0; a < r.prob.size(); ++a)
                if (fn.values(r.neighbors[a]) < fn.values(i) - 0.05)
                    CHECK(r.prob[a] < 1e-12);
        }
    }
}

TEST_CASE("laplacian rows") {
    SUBCASE("complete graph proposes uniformly when the coherences are equal") {
        // for 1 < k < n the coherences of K_n depend on the pinned basis for
        // the degenerate eigenvalue, so only k = 1 and k = n are symmetric
        Graph kn = erdos_renyi(6, 1.0, 0);
        SpectralBasis b = eigendecompose(laplacian(kn));
        for (int k : {1, 6}) {
            CoherenceProfile coh = coherence_profile(b, k);
            WalkKernel kern = WalkKernel::laplacian(kn, Eigen::VectorXd::Ones(6), coh);
            KernelRow r = kern.row(2);
            for (double p : r.prob) CHECK(p == doctest::Approx(0.2));
            CHECK(r.self_prob == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
    SUBCASE("k = n on a regular graph reduces to the squared-ratio kernel") {
        Graph cycle = grid_graph(2, 2);  // 4-cycle, 2-regular
        SpectralBasis b = eigendecompose(laplacian(cycle));
        CoherenceProfile coh = coherence_profile(b, 4);
        Eigen::VectorXd f(4);
        f << 1.0, 2.0, 0.5, 1.5;
        WalkKernel k = WalkKernel::laplacian(cycle, f, coh);
        for (int i = 0; i < 4; ++i) {
            KernelRow r = k.row(i);
            for (std::size_t a = 0; a < r.prob.size(); ++a) {
                int j = r.neighbors[a];
                double expected =
                    0.5 * std::min(1.0, (f(j) * f(j)) / (f(i) * f(i)));
                CHECK(r.prob[a] == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
    SUBCASE("path endpoint proposes its single neighbor") {
        Graph g = path3();
        SpectralBasis b = eigendecompose(laplacian(g));
        CoherenceProfile coh = coherence_profile(b, 2);
        Eigen::VectorXd f = Eigen::VectorXd::Ones(3);
        WalkKernel k = WalkKernel::laplacian(g, f, coh);
        KernelRow r = k.row(0);
        // single neighbor; acceptance can still leave self mass
        CHECK(r.prob.size() == 1);
        CHECK(r.prob[0] + r.self_prob == doctest::Approx(1.0));
        CHECK(r.prob[0] > 0.0);
    }
    SUBCASE("eps = 0 equals the exact variant, large eps approaches vanilla proposal") {
        Graph g = erdos_renyi(12, 0.4, 9);
        SpectralBasis b = eigendecompose(laplacian(g));
        CoherenceProfile coh = coherence_profile(b, 3);
        GraphFunction fn = synth_smooth(b, 3, 5);
        WalkKernel exact = WalkKernel::laplacian(g, fn.values, coh, 0.0);
        WalkKernel eps0 = WalkKernel::laplacian(g, fn.values, coh);
        for (int i = 0; i < g.n; ++i) {
            KernelRow a = exact.row(i), c = eps0.row(i);
            for (std::size_t q = 0; q < a.prob.size(); ++q)
                CHECK(a.prob[q] == c.prob[q]);
        }
        WalkKernel huge = WalkKernel::laplacian(g, Eigen::VectorXd::Ones(g.n), coh, 1e6);
        for (int i = 0; i < g.n; ++i) {
            KernelRow r = huge.row(i);
            // uniform proposal times the degree-ratio acceptance
            for (std::size_t a = 0; a < r.prob.size(); ++a) {
                int j = r.neighbors[a];
                double expected = (1.0 / g.degree[i]) *
                                  std::min(1.0, static_cast<double>(g.degree[i]) /
                                                    g.degree[j]);
                CHECK(r.prob[a] == doctest::Approx(expected).epsilon(1e-4));
            }
        }
    }
    SUBCASE("nonpositive f rejected") {
        Graph g = path3();
        SpectralBasis b = eigendecompose(laplacian(g));
        CoherenceProfile coh = coherence_profile(b, 2);
        Eigen::VectorXd f(3);
        f << 1.0, 0.0, 2.0;
        CHECK_THROWS_AS(WalkKernel::laplacian(g, f, coh), std::invalid_argument);
    }
}

TEST_CASE("detailed balance on random instances") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = erdos_renyi(20, 0.3, seed + 50);
        SpectralBasis b = eigendecompose(laplacian(g));
        int k = 2 + static_cast<int>(seed % 5);
        GraphFunction fn = synth_smooth(b, k, seed);
        CoherenceProfile coh = coherence_profile(b, k);
        for (double gamma : {0.0, 0.5, 1.0}) {
            WalkKernel e = WalkKernel::exponential(g, fn.values, gamma);
            CHECK(detailed_balance_gap(e) < 1e-12);
            check_row_invariants(e);
        }
        for (double eps : {0.0, 0.05}) {
            WalkKernel l = WalkKernel::laplacian(g, fn.values, coh, eps);
            CHECK(detailed_balance_gap(l) < 1e-12);
            check_row_invariants(l);
        }
    }
}

TEST_CASE("dominance envelopes") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = erdos_renyi(24, 0.3, seed + 100);
        SpectralBasis b = eigendecompose(laplacian(g));
        int k = 2 + static_cast<int>(seed);
        GraphFunction fn = synth_smooth(b, k, seed);
        CoherenceProfile coh = coherence_profile(b, k);
        TargetDensity p = squared_density(fn.values);
        // exact smooth: Q'_ij >= p(j) / k
        WalkKernel exact = WalkKernel::laplacian(g, fn.values, coh);
        for (int i = 0; i < g.n; ++i)
            for (int j : g.adj[i]) {
                double w = coh.c(j) * coh.c(j);
                double S = 0;
                for (int q : g.adj[i]) S += coh.c(q) * coh.c(q);
                CHECK(w / S >= p.p(j) / k - 1e-12);
            }
        (void)exact;
    }
}

TEST_CASE("run walk") {
    Graph g = path3();
    Eigen::VectorXd f(3);
    f << 1, 2, 3;
    WalkKernel k = WalkKernel::vanilla(g, f);
    SUBCASE("T = 0 records only the start") {
        WalkTrace t = run_walk(k, 0, 5);
        CHECK(t.path.size() == 1);
        CHECK(t.i_max == t.start);
    }
    SUBCASE("constant f hits immediately") {
        WalkKernel kc = WalkKernel::vanilla(g, Eigen::VectorXd::Ones(3));
        for (std::uint64_t s = 0; s < 5; ++s) CHECK(run_walk(kc, 10, s).t_hit == 0);
    }
    SUBCASE("forced move on K2") {
        Graph k2 = load_graph("0 1");
        Eigen::VectorXd h(2);
        h << 1, 2;
        WalkKernel kv = WalkKernel::vanilla(k2, h);
        for (std::uint64_t s = 0; s < 10; ++s) {
            WalkTrace t = run_walk(kv, 10, s);
            CHECK(t.t_hit == (t.start == 1 ? 0 : 1));
        }
    }
    SUBCASE("deterministic traces") {
        WalkTrace a = run_walk(k, 100, 77);
        WalkTrace b2 = run_walk(k, 100, 77);
        CHECK(a.path == b2.path);
        CHECK(a.t_hit == b2.t_hit);
    }
    SUBCASE("trace csv shape") {
        WalkTrace t = run_walk(k, 5, 3);
        std::string csv = trace_to_csv(t, f);
        CHECK(csv.rfind("step,vertex,f_value,is_new_max\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') ==
              static_cast<long>(t.path.size()) + 1);
    }
}

TEST_CASE("occupation distribution") {
    Graph g = erdos_renyi(12, 0.4, 77);
    SUBCASE("gamma 0 converges to uniform") {
        WalkKernel k = WalkKernel::exponential(g, Eigen::VectorXd::Ones(g.n), 0.0);
        Eigen::VectorXd occ = occupation_distribution(k, 200000, 1000, 1);
        Eigen::VectorXd uniform = Eigen::VectorXd::Constant(g.n, 1.0 / g.n);
        CHECK(tv_distance(occ, uniform) < 0.05);
    }
    SUBCASE("vanilla converges to degree-proportional") {
        WalkKernel k = WalkKernel::vanilla(g, Eigen::VectorXd::Ones(g.n));
        Eigen::VectorXd occ = occupation_distribution(k, 200000, 1000, 2);
        Eigen::VectorXd deg(g.n);
        for (int i = 0; i < g.n; ++i) deg(i) = g.degree[i];
        deg /= deg.sum();
        CHECK(tv_distance(occ, deg) < 0.05);
    }
    SUBCASE("K2 symmetry") {
        Graph k2 = load_graph("0 1");
        WalkKernel k = WalkKernel::vanilla(k2, Eigen::VectorXd::Ones(2));
        Eigen::VectorXd occ = occupation_distribution(k, 100000, 0, 3);
        CHECK(occ(0) == doctest::Approx(0.5).epsilon(0.02));
    }
}

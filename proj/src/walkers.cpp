#include "graphwalk/walkers.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "graphwalk/rng.hpp"

namespace graphwalk {

WalkKernel WalkKernel::vanilla(const Graph& g, Eigen::VectorXd f) {
    if (f.size() != g.n) throw std::invalid_argument("function length mismatch");
    WalkKernel k;
    k.kind_ = WalkerKind::Vanilla;
    k.g_ = &g;
    k.f_ = std::move(f);
    return k;
}

WalkKernel WalkKernel::exponential(const Graph& g, Eigen::VectorXd f, double gamma) {
    if (f.size() != g.n) throw std::invalid_argument("function length mismatch");
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    WalkKernel k;
    k.kind_ = WalkerKind::Exponential;
    k.g_ = &g;
    k.f_ = std::move(f);
    k.gamma_ = gamma;
    return k;
}

WalkKernel WalkKernel::laplacian(const Graph& g, Eigen::VectorXd f,
                                 const CoherenceProfile& coh, double eps) {
    if (f.size() != g.n) throw std::invalid_argument("function length mismatch");
    if (coh.c.size() != g.n) throw std::invalid_argument("coherence length mismatch");
    if (eps < 0) throw std::invalid_argument("eps must be >= 0");
    for (int i = 0; i < g.n; ++i)
        if (f(i) <= 0)
            throw std::invalid_argument("laplacian walk requires f > 0; f(" +
                                        std::to_string(i) + ") <= 0");
    WalkKernel k;
    k.kind_ = eps > 0 ? WalkerKind::LaplacianEps : WalkerKind::Laplacian;
    k.g_ = &g;
    k.f_ = std::move(f);
    k.eps_ = eps;
    k.k_ = coh.k;
    k.w_ = (coh.c.array() + eps).square();
    if (eps == 0.0) {
        for (int i = 0; i < g.n; ++i)
            if (k.w_(i) <= 0)
                throw std::invalid_argument(
                    "degenerate coherence: c = 0 at vertex " + std::to_string(i));
    }
    k.S_.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        double s = 0;
        for (int j : g.adj[i]) s += k.w_(j);
        if (s <= 0)
            throw std::invalid_argument(
                "degenerate proposal: all neighbor coherences zero at vertex " +
                std::to_string(i));
        k.S_(i) = s;
    }
    return k;
}

KernelRow WalkKernel::row(int i) const {
    if (i < 0 || i >= g_->n) throw std::invalid_argument("vertex out of range");
    const auto& nb = g_->adj[i];
    KernelRow r;
    r.neighbors = nb;
    r.prob.resize(nb.size());
    const double di = g_->degree[i];
    switch (kind_) {
        case WalkerKind::Vanilla: {
            for (std::size_t a = 0; a < nb.size(); ++a) r.prob[a] = 1.0 / di;
            r.self_prob = 0.0;
            break;
        }
        case WalkerKind::Exponential: {
            double moved = 0.0;
            for (std::size_t a = 0; a < nb.size(); ++a) {
                int j = nb[a];
                // log-space acceptance; exp only when the ratio is < 1
                double log_ratio = gamma_ * (f_(j) - f_(i)) +
                                   std::log(di / g_->degree[j]);
                double accept = log_ratio >= 0 ? 1.0 : std::exp(log_ratio);
                r.prob[a] = accept / di;
                moved += r.prob[a];
            }
            r.self_prob = std::max(0.0, 1.0 - moved);
            break;
        }
        case WalkerKind::Laplacian:
        case WalkerKind::LaplacianEps: {
            double moved = 0.0;
            for (std::size_t a = 0; a < nb.size(); ++a) {
                int j = nb[a];
                if (w_(j) <= 0 || w_(i) <= 0)
                    throw std::invalid_argument(
                        "degenerate coherence on edge " + std::to_string(i) + "-" +
                        std::to_string(j));
                double proposal = w_(j) / S_(i);
                double ratio = (f_(j) * f_(j)) / (f_(i) * f_(i)) *
                               (w_(i) / w_(j)) * (S_(i) / S_(j));
                double accept = std::min(1.0, ratio);
                r.prob[a] = proposal * accept;
                moved += r.prob[a];
            }
            r.self_prob = std::max(0.0, 1.0 - moved);
            break;
        }
    }
    return r;
}

TargetDensity WalkKernel::target() const {
    switch (kind_) {
        case WalkerKind::Vanilla: {
            // stationary distribution of D^-1 W is degree-proportional
            TargetDensity t;
            t.p.resize(g_->n);
            for (int i = 0; i < g_->n; ++i) t.p(i) = g_->degree[i];
            t.p /= t.p.sum();
            t.delta_f = t.p.minCoeff();
            t.Delta_f = t.p.maxCoeff();
            return t;
        }
        case WalkerKind::Exponential:
            return exponential_density(f_, gamma_);
        case WalkerKind::Laplacian:
        case WalkerKind::LaplacianEps:
            return squared_density(f_);
    }
    throw std::logic_error("unreachable");
}

std::string WalkKernel::name() const {
    switch (kind_) {
        case WalkerKind::Vanilla: return "vanilla";
        case WalkerKind::Exponential: return "exponential";
        case WalkerKind::Laplacian: return "laplacian";
        case WalkerKind::LaplacianEps: return "laplacian_eps";
    }
    return "?";
}

WalkTrace run_walk(const WalkKernel& kernel, std::int64_t T, std::uint64_t seed,
                   RecordPolicy policy, double hit_value, bool stop_on_hit) {
    if (T < 0) throw std::invalid_argument("step cap must be >= 0");
    const Graph& g = kernel.graph();
    const Eigen::VectorXd& f = kernel.f();
    if (std::isnan(hit_value)) hit_value = f.maxCoeff();

    Rng rng = make_rng(seed);
    WalkTrace trace;
    trace.seed = seed;
    trace.start = uniform_index(rng, g.n);

    int current = trace.start;
    trace.i_max = current;
    trace.f_max = f(current);
    if (f(current) >= hit_value) trace.t_hit = 0;
    if (policy == RecordPolicy::Full) trace.path.push_back(current);

    for (std::int64_t t = 1; t <= T; ++t) {
        if (stop_on_hit && trace.t_hit >= 0) break;
        KernelRow row = kernel.row(current);
        double u = uniform01(rng);
        int next = current;  // fall through to the self-loop
        double acc = 0.0;
        for (std::size_t a = 0; a < row.neighbors.size(); ++a) {
            acc += row.prob[a];
            if (u < acc) {
                next = row.neighbors[a];
                break;
            }
        }
        current = next;
        trace.steps = t;
        if (policy == RecordPolicy::Full) trace.path.push_back(current);
        if (f(current) > trace.f_max) {
            trace.f_max = f(current);
            trace.i_max = current;
        }
        if (trace.t_hit < 0 && f(current) >= hit_value) trace.t_hit = t;
    }
    return trace;
}

Eigen::VectorXd occupation_distribution(const WalkKernel& kernel, std::int64_t T,
                                        std::int64_t burn_in, std::uint64_t seed) {
    if (T <= burn_in) throw std::invalid_argument("T must exceed burn_in");
    const Graph& g = kernel.graph();
    Rng rng = make_rng(seed);
    int current = uniform_index(rng, g.n);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(g.n);
    for (std::int64_t t = 1; t <= T; ++t) {
        KernelRow row = kernel.row(current);
        double u = uniform01(rng);
        double acc = 0.0;
        int next = current;
        for (std::size_t a = 0; a < row.neighbors.size(); ++a) {
            acc += row.prob[a];
            if (u < acc) {
                next = row.neighbors[a];
                break;
            }
        }
        current = next;
        if (t > burn_in) counts(current) += 1.0;
    }
    return counts / counts.sum();
}

std::string trace_to_csv(const WalkTrace& trace, const Eigen::VectorXd& f) {
    if (trace.path.empty())
        throw std::invalid_argument("trace was recorded without a path");
    std::ostringstream out;
    out << "step,vertex,f_value,is_new_max\n";
    char buf[64];
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trace.path.size(); ++t) {
        int v = trace.path[t];
        bool is_new_max = f(v) > best;
        if (is_new_max) best = f(v);
        std::snprintf(buf, sizeof(buf), "%.17e", f(v));
        out << t << ',' << v << ',' << buf << ',' << (is_new_max ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace graphwalk

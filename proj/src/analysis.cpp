#include "graphwalk/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace graphwalk {

BoundInputs bound_inputs(const WalkKernel& kernel, int diameter) {
    BoundInputs inp;
    const Graph& g = kernel.graph();
    TargetDensity t = kernel.target();
    inp.r = diameter;
    inp.d_max = g.d_max;
    inp.delta_f = t.delta_f;
    inp.Delta_f = t.Delta_f;
    inp.gamma = kernel.gamma();
    inp.f_max = kernel.f().maxCoeff();
    inp.f_min = kernel.f().minCoeff();
    inp.f_norm_sq = kernel.f().squaredNorm();
    inp.n = g.n;
    inp.k = kernel.smooth_order();
    inp.eps = kernel.eps();
    inp.M = kernel.smooth_order() > 0
                ? dominance_M(kernel.smooth_order(), g.n, kernel.eps())
                : 1.0;
    return inp;
}

double theta_exponential(const BoundInputs& inp) {
    double raw = 1.0 - std::pow(inp.delta_f, inp.r - 1) /
                           std::pow(inp.d_max * inp.Delta_f, inp.r);
    return std::max(0.0, raw);
}

double theta_laplacian(const BoundInputs& inp) {
    double raw = 1.0 - std::pow(inp.delta_f, inp.r - 1) / std::pow(inp.M, inp.r);
    return std::max(0.0, raw);
}

static double tv_bound(double theta, std::int64_t t, int r) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    return std::pow(theta, static_cast<double>(t / r));
}

double tv_bound_exponential(const BoundInputs& inp, std::int64_t t) {
    return tv_bound(theta_exponential(inp), t, inp.r);
}

double tv_bound_laplacian(const BoundInputs& inp, std::int64_t t) {
    return tv_bound(theta_laplacian(inp), t, inp.r);
}

double hitting_bound_exponential(const BoundInputs& inp) {
    return std::pow(inp.d_max, inp.r) *
           std::exp(inp.gamma * (inp.r - 1) * (inp.f_max - inp.f_min));
}

double hitting_bound_laplacian(const BoundInputs& inp) {
    if (inp.f_min <= 0)
        throw std::invalid_argument("laplacian hitting bound requires f > 0");
    return std::pow(inp.M * inp.f_norm_sq, inp.r) /
           (inp.f_max * inp.f_max * std::pow(inp.f_min, 2.0 * (inp.r - 1)));
}

double highprob_hitting_bound(double t_star, double s, double t) {
    if (s <= 0) throw std::invalid_argument("s must be > 0");
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    return std::min(1.0, std::pow(t_star / s, std::floor(t / s)));
}

double dominance_M(int k, int n, double eps) {
    if (k < 1 || n < 1) throw std::invalid_argument("k and n must be >= 1");
    if (eps < 0) throw std::invalid_argument("eps must be >= 0");
    if (eps == 0.0) return k;
    return k + 2.0 * k * std::sqrt(static_cast<double>(n)) * eps + n * eps * eps;
}

Eigen::MatrixXd dense_kernel(const WalkKernel& kernel, int cap) {
    const Graph& g = kernel.graph();
    if (g.n > cap)
        throw std::invalid_argument("dense_kernel: n exceeds the oracle cap");
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        KernelRow row = kernel.row(i);
        for (std::size_t a = 0; a < row.neighbors.size(); ++a)
            P(i, row.neighbors[a]) = row.prob[a];
        P(i, i) = row.self_prob;
    }
    return P;
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& P) {
    const int n = static_cast<int>(P.rows());
    Eigen::MatrixXd A = P.transpose() - Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    A.row(n - 1).setOnes();  // replace one redundant equation by sum = 1
    b(n - 1) = 1.0;
    Eigen::VectorXd pi = A.fullPivLu().solve(b);
    return pi;
}

double tv_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return 0.5 * (a - b).cwiseAbs().sum();
}

std::vector<double> exact_tv_curve(const Eigen::MatrixXd& P,
                                   const Eigen::VectorXd& p, int t_max) {
    const int n = static_cast<int>(P.rows());
    std::vector<double> curve;
    curve.reserve(t_max + 1);
    Eigen::MatrixXd Pt = Eigen::MatrixXd::Identity(n, n);
    for (int t = 0; t <= t_max; ++t) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, tv_distance(Pt.row(i).transpose(), p));
        curve.push_back(worst);
        if (t < t_max) Pt = Pt * P;
    }
    return curve;
}

HittingTimes exact_expected_hitting(const Eigen::MatrixXd& P,
                                    const std::vector<int>& target) {
    const int n = static_cast<int>(P.rows());
    if (target.empty()) throw std::invalid_argument("target set is empty");
    std::vector<char> is_target(n, 0);
    for (int v : target) {
        if (v < 0 || v >= n) throw std::invalid_argument("target vertex out of range");
        is_target[v] = 1;
    }
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (!is_target[i]) others.push_back(i);
    HittingTimes h;
    h.per_start = Eigen::VectorXd::Zero(n);
    if (!others.empty()) {
        const int m = static_cast<int>(others.size());
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                A(a, b) = (a == b ? 1.0 : 0.0) - P(others[a], others[b]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (!lu.isInvertible())
            throw std::runtime_error("hitting-time system is singular: target unreachable");
        Eigen::VectorXd hq = lu.solve(Eigen::VectorXd::Ones(m));
        for (int a = 0; a < m; ++a) h.per_start(others[a]) = hq(a);
    }
    h.uniform_start = h.per_start.mean();
    h.max_over_starts = h.per_start.maxCoeff();
    return h;
}

std::vector<int> argmax_set(const Eigen::VectorXd& f) {
    double fmax = f.maxCoeff();
    std::vector<int> out;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        if (f(i) >= fmax) out.push_back(static_cast<int>(i));
    return out;
}

double detailed_balance_gap(const WalkKernel& kernel) {
    const Graph& g = kernel.graph();
    TargetDensity t = kernel.target();
    double gap = 0.0;
    for (int i = 0; i < g.n; ++i) {
        KernelRow ri = kernel.row(i);
        for (std::size_t a = 0; a < ri.neighbors.size(); ++a) {
            int j = ri.neighbors[a];
            if (j < i) continue;
            KernelRow rj = kernel.row(j);
            double pji = 0.0;
            for (std::size_t b = 0; b < rj.neighbors.size(); ++b)
                if (rj.neighbors[b] == i) pji = rj.prob[b];
            gap = std::max(gap, std::abs(t.p(i) * ri.prob[a] - t.p(j) * pji));
        }
    }
    return gap;
}

}  // namespace graphwalk

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "graphwalk/graph.hpp"
#include "graphwalk/spectral.hpp"
#include "graphwalk/target.hpp"

namespace graphwalk {

enum class WalkerKind { Vanilla, Exponential, Laplacian, LaplacianEps };

/// One row of a transition kernel: move probabilities over the neighbors of a
/// vertex, plus the self probability absorbing the rejected mass.
struct KernelRow {
    std::vector<int> neighbors;
    std::vector<double> prob;
    double self_prob = 0.0;
};

/// Local row-stochastic transition rule for one of the walk algorithms.
/// Rows are computed lazily from per-vertex data; nothing n x n is stored.
/// Immutable and shareable; holds a pointer to the graph, which must outlive
/// the kernel.
class WalkKernel {
  public:
    /// P = D^-1 W. f is carried only for running-max tracking.
    static WalkKernel vanilla(const Graph& g, Eigen::VectorXd f);

    /// Metropolis-Hastings with proposal D^-1 W and target p ∝ exp(gamma f).
    static WalkKernel exponential(const Graph& g, Eigen::VectorXd f, double gamma);

    /// Metropolis-Hastings with coherence-weighted proposal and target
    /// p ∝ f^2. eps > 0 switches the proposal weights to (c_j + eps)^2 for
    /// approximately smooth functions; eps = 0 is the exact variant.
    static WalkKernel laplacian(const Graph& g, Eigen::VectorXd f,
                                const CoherenceProfile& coh, double eps = 0.0);

    KernelRow row(int i) const;

    WalkerKind kind() const { return kind_; }
    const Graph& graph() const { return *g_; }
    const Eigen::VectorXd& f() const { return f_; }
    double gamma() const { return gamma_; }
    double eps() const { return eps_; }
    int smooth_order() const { return k_; }
    TargetDensity target() const;
    std::string name() const;

  private:
    WalkKernel() = default;
    WalkerKind kind_ = WalkerKind::Vanilla;
    const Graph* g_ = nullptr;
    Eigen::VectorXd f_;
    double gamma_ = 0.0;
    double eps_ = 0.0;
    int k_ = 0;
    Eigen::VectorXd w_;  // proposal weights (c_i + eps)^2, laplacian kinds
    Eigen::VectorXd S_;  // S_i = sum of w_j over neighbors of i
};

enum class RecordPolicy { Full, CountersOnly };

struct WalkTrace {
    std::uint64_t seed = 0;
    int start = 0;
    std::vector<int> path;  // populated under RecordPolicy::Full
    int i_max = 0;
    double f_max = 0.0;
    std::int64_t t_hit = -1;  // -1 means never hit within the cap
    std::int64_t steps = 0;

    bool capped() const { return t_hit < 0; }
};

/// Runs the walk for up to T steps from a uniformly sampled start vertex.
/// hit_value is the function value that defines a hit (the harness passes the
/// global maximum); a NaN hit_value means "use max of the kernel's f".
/// With stop_on_hit the walk halts at the hitting step.
WalkTrace run_walk(const WalkKernel& kernel, std::int64_t T, std::uint64_t seed,
                   RecordPolicy policy = RecordPolicy::Full,
                   double hit_value = std::numeric_limits<double>::quiet_NaN(),
                   bool stop_on_hit = false);

/// Normalized visit counts over steps (burn_in, T].
Eigen::VectorXd occupation_distribution(const WalkKernel& kernel, std::int64_t T,
                                        std::int64_t burn_in, std::uint64_t seed);

/// Trace dump format: CSV "step,vertex,f_value,is_new_max".
std::string trace_to_csv(const WalkTrace& trace, const Eigen::VectorXd& f);

}  // namespace graphwalk

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphwalk/analysis.hpp"
#include "graphwalk/graph.hpp"
#include "graphwalk/spectral.hpp"
#include "graphwalk/walkers.hpp"

namespace graphwalk {

struct ExperimentConfig {
    std::vector<int> ks{5, 10, 20};
    std::vector<double> gammas{0.0, 1.0};
    bool include_vanilla = true;
    bool include_laplacian = true;
    bool include_eps_walker = false;  // laplacian variant with eps from decompose()
    // Proposal smoothing for the laplacian walker; 0 recovers the exact
    // variant. The default keeps the walk effective on graphs whose low
    // eigenvectors localize (sparse ER): with eps = 0 the reverse-proposal
    // factor S_i/S_j shields neighbors of high-coherence spikes and hitting
    // times collapse. The target density (f^2) is unchanged for any eps.
    double eps = 0.2;
    int functions = 10;
    int trials = 100;
    std::int64_t step_cap = 10000;
    std::uint64_t master_seed = 0;
    int threads = 1;
    double target_quantile = 1.0;  // 1.0 = hit the global maximum
    bool timing = false;           // off by default so output is byte-stable
};

struct ResultRow {
    std::string family;
    int n = 0;
    int k = 0;
    std::string algorithm;
    double param = 0.0;  // gamma for exponential, eps for laplacian_eps
    int func_idx = 0;
    int trial_idx = 0;
    std::uint64_t seed = 0;
    std::int64_t t_hit = 0;  // cap value when capped
    bool capped = false;
    std::int64_t wall_ns = 0;
};

/// Runs the hitting-time sweep for one graph. Seeds are pre-assigned per
/// (k, function, trial) from the master seed, so the output is identical for
/// any thread count. Rows come back sorted by (k, algorithm, func, trial).
std::vector<ResultRow> run_bench(const Graph& g, const std::string& family,
                                 const SpectralBasis& basis,
                                 const ExperimentConfig& cfg);

/// Results CSV, header "family,n,k,algorithm,param,func_idx,trial_idx,seed,t_hit,capped,wall_ns".
std::string results_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> results_from_csv(const std::string& text);

struct SummaryRow {
    std::string algorithm;
    double param = 0.0;
    int k = 0;
    double mean_t_hit = 0.0;  // capped runs counted at the cap
    double median_t_hit = 0.0;
    double cap_rate = 0.0;
    int count = 0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

struct BoundReportRow {
    std::string quantity;
    std::string instance_id;
    double value = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    bool has_value = false;  // exact columns absent above the oracle cap
};

/// Bound report for one (graph, function, walker) instance; exact oracle
/// columns are filled only when n is within the oracle cap.
std::vector<BoundReportRow> bound_report(const Graph& g, const WalkKernel& kernel,
                                         const std::string& instance_id,
                                         int t_max = 200, int oracle_cap = 256);
std::string bound_report_to_csv(const std::vector<BoundReportRow>& rows);

/// One SVG per graph family: mean hitting time (log scale) against k, one
/// polyline per algorithm, cap rates annotated. Returns family -> SVG text.
std::map<std::string, std::string> plot_results(const std::vector<ResultRow>& rows);

}  // namespace graphwalk

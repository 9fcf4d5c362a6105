#include "graphwalk/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "graphwalk/rng.hpp"
#include "graphwalk/target.hpp"

namespace graphwalk {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double quantile_value(const Eigen::VectorXd& f, double q) {
    std::vector<double> sorted(f.data(), f.data() + f.size());
    std::sort(sorted.begin(), sorted.end());
    auto idx = static_cast<std::size_t>(
        std::floor(q * (static_cast<double>(sorted.size()) - 1.0)));
    return sorted[idx];
}

struct WalkerSpec {
    WalkKernel kernel;
    std::string algorithm;
    double param;
};

struct FuncContext {
    int k;
    int func_idx;
    GraphFunction fn;
    double hit_value;
    std::vector<WalkerSpec> walkers;
};

}  // namespace

std::vector<ResultRow> run_bench(const Graph& g, const std::string& family,
                                 const SpectralBasis& basis,
                                 const ExperimentConfig& cfg) {
    if (cfg.trials < 1 || cfg.functions < 1)
        throw std::invalid_argument("trials and functions must be >= 1");
    if (cfg.step_cap < 1) throw std::invalid_argument("step cap must be >= 1");
    if (cfg.target_quantile <= 0 || cfg.target_quantile > 1)
        throw std::invalid_argument("target quantile must be in (0, 1]");
    if (cfg.eps < 0) throw std::invalid_argument("eps must be >= 0");

    // one context per (k, function): synthesized function plus all kernels
    std::vector<FuncContext> contexts;
    for (int k : cfg.ks) {
        CoherenceProfile coh = coherence_profile(basis, k);
        for (int func_idx = 0; func_idx < cfg.functions; ++func_idx) {
            FuncContext ctx;
            ctx.k = k;
            ctx.func_idx = func_idx;
            std::uint64_t fseed =
                derive_seed(cfg.master_seed, 0xF00DULL, static_cast<std::uint64_t>(k),
                            static_cast<std::uint64_t>(func_idx));
            ctx.fn = synth_smooth(basis, k, fseed);
            ctx.hit_value = cfg.target_quantile >= 1.0
                                ? ctx.fn.values.maxCoeff()
                                : quantile_value(ctx.fn.values, cfg.target_quantile);
            if (cfg.include_vanilla)
                ctx.walkers.push_back(
                    {WalkKernel::vanilla(g, ctx.fn.values), "vanilla", 0.0});
            for (double gamma : cfg.gammas)
                ctx.walkers.push_back(
                    {WalkKernel::exponential(g, ctx.fn.values, gamma), "exponential",
                     gamma});
            if (cfg.include_laplacian)
                ctx.walkers.push_back(
                    {WalkKernel::laplacian(g, ctx.fn.values, coh, cfg.eps),
                     "laplacian", cfg.eps});
            if (cfg.include_eps_walker) {
                double eps = decompose(ctx.fn.values, basis, k).eps_min;
                ctx.walkers.push_back(
                    {WalkKernel::laplacian(g, ctx.fn.values, coh, eps),
                     "laplacian_eps", eps});
            }
            contexts.push_back(std::move(ctx));
        }
    }

    struct Job {
        const FuncContext* ctx;
        std::size_t walker;
        int trial;
        std::uint64_t seed;
    };
    // emission order = (k, algorithm, function, trial); seeds depend only on
    // (master, k, function, trial), never on scheduling
    std::vector<Job> jobs;
    const std::size_t walkers_per_ctx = contexts.empty() ? 0 : contexts[0].walkers.size();
    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        for (std::size_t w = 0; w < walkers_per_ctx; ++w) {
            for (int func_idx = 0; func_idx < cfg.functions; ++func_idx) {
                const FuncContext& ctx = contexts[ki * cfg.functions + func_idx];
                for (int trial = 0; trial < cfg.trials; ++trial) {
                    std::uint64_t seed = derive_seed(
                        cfg.master_seed, static_cast<std::uint64_t>(ctx.k),
                        static_cast<std::uint64_t>(func_idx),
                        static_cast<std::uint64_t>(trial));
                    jobs.push_back({&ctx, w, trial, seed});
                }
            }
        }
    }

    std::vector<ResultRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            const Job& job = jobs[idx];
            const WalkerSpec& spec = job.ctx->walkers[job.walker];
            auto t0 = std::chrono::steady_clock::now();
            WalkTrace trace =
                run_walk(spec.kernel, cfg.step_cap, job.seed,
                         RecordPolicy::CountersOnly, job.ctx->hit_value, true);
            auto t1 = std::chrono::steady_clock::now();
            ResultRow& row = rows[idx];
            row.family = family;
            row.n = g.n;
            row.k = job.ctx->k;
            row.algorithm = spec.algorithm;
            row.param = spec.param;
            row.func_idx = job.ctx->func_idx;
            row.trial_idx = job.trial;
            row.seed = job.seed;
            row.capped = trace.capped();
            row.t_hit = row.capped ? cfg.step_cap : trace.t_hit;
            row.wall_ns =
                cfg.timing
                    ? std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                          .count()
                    : 0;
        }
    };
    int nthreads = std::max(1, cfg.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string results_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "family,n,k,algorithm,param,func_idx,trial_idx,seed,t_hit,capped,wall_ns\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.n << ',' << r.k << ',' << r.algorithm << ','
            << fmt_double(r.param) << ',' << r.func_idx << ',' << r.trial_idx << ','
            << r.seed << ',' << r.t_hit << ',' << (r.capped ? 1 : 0) << ','
            << r.wall_ns << '\n';
    }
    return out.str();
}

std::vector<ResultRow> results_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("family,", 0) != 0)
        throw std::invalid_argument("results csv: missing header");
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 11)
            throw std::invalid_argument("results csv: malformed row: " + line);
        ResultRow r;
        r.family = fields[0];
        r.n = std::stoi(fields[1]);
        r.k = std::stoi(fields[2]);
        r.algorithm = fields[3];
        r.param = std::stod(fields[4]);
        r.func_idx = std::stoi(fields[5]);
        r.trial_idx = std::stoi(fields[6]);
        r.seed = std::stoull(fields[7]);
        r.t_hit = std::stoll(fields[8]);
        r.capped = fields[9] == "1";
        r.wall_ns = std::stoll(fields[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
    std::map<std::tuple<std::string, double, int>, std::vector<const ResultRow*>> groups;
    for (const auto& r : rows)
        groups[{r.algorithm, r.param, r.k}].push_back(&r);
    std::vector<SummaryRow> out;
    for (const auto& [key, members] : groups) {
        SummaryRow s;
        std::tie(s.algorithm, s.param, s.k) = key;
        s.count = static_cast<int>(members.size());
        std::vector<double> hits;
        int capped = 0;
        for (const ResultRow* r : members) {
            hits.push_back(static_cast<double>(r->t_hit));
            if (r->capped) ++capped;
        }
        std::sort(hits.begin(), hits.end());
        double sum = 0;
        for (double h : hits) sum += h;
        s.mean_t_hit = sum / hits.size();
        s.median_t_hit = hits.size() % 2 == 1
                             ? hits[hits.size() / 2]
                             : 0.5 * (hits[hits.size() / 2 - 1] + hits[hits.size() / 2]);
        s.cap_rate = static_cast<double>(capped) / hits.size();
        out.push_back(std::move(s));
    }
    return out;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "algorithm,param,k,mean_t_hit,median_t_hit,cap_rate,count\n";
    for (const auto& s : rows) {
        out << s.algorithm << ',' << fmt_double(s.param) << ',' << s.k << ','
            << fmt_double(s.mean_t_hit) << ',' << fmt_double(s.median_t_hit) << ','
            << fmt_double(s.cap_rate) << ',' << s.count << '\n';
    }
    return out.str();
}

std::vector<BoundReportRow> bound_report(const Graph& g, const WalkKernel& kernel,
                                         const std::string& instance_id, int t_max,
                                         int oracle_cap) {
    const bool exponential = kernel.kind() == WalkerKind::Exponential ||
                             kernel.kind() == WalkerKind::Vanilla;
    int r = diameter(g);
    BoundInputs inp = bound_inputs(kernel, r);
    double theta = exponential ? theta_exponential(inp) : theta_laplacian(inp);
    double t_star = exponential ? hitting_bound_exponential(inp)
                                : hitting_bound_laplacian(inp);
    std::vector<BoundReportRow> rows;
    auto push = [&](const std::string& quantity, double value, double bound,
                    bool satisfied, bool has_value) {
        rows.push_back({quantity, instance_id, value, bound, satisfied, has_value});
    };
    push("theta", theta, theta, true, true);
    push("M", inp.M, inp.M, true, true);
    push("t_star_hit", t_star, t_star, true, true);

    const bool oracle = g.n <= oracle_cap;
    Eigen::MatrixXd P;
    TargetDensity target = kernel.target();
    if (oracle) P = dense_kernel(kernel, oracle_cap);

    std::vector<int> sample_ts = {r, 2 * r, 5 * r, 10 * r};
    std::vector<double> curve;
    if (oracle) curve = exact_tv_curve(P, target.p, std::min(t_max, 10 * r));
    for (int t : sample_ts) {
        if (t > t_max) continue;
        double bound = exponential ? tv_bound_exponential(inp, t)
                                   : tv_bound_laplacian(inp, t);
        if (oracle && t < static_cast<int>(curve.size())) {
            push("tv_t" + std::to_string(t), curve[t], bound, curve[t] <= bound + 1e-12,
                 true);
        } else {
            push("tv_t" + std::to_string(t), 0.0, bound, true, false);
        }
    }
    if (oracle) {
        HittingTimes hit = exact_expected_hitting(P, argmax_set(kernel.f()));
        push("hitting_uniform_start", hit.uniform_start, t_star,
             hit.uniform_start <= t_star + 1e-9, true);
        push("hitting_max_start", hit.max_over_starts, t_star,
             hit.max_over_starts <= t_star + 1e-9, true);
    } else {
        push("hitting_uniform_start", 0.0, t_star, true, false);
        push("hitting_max_start", 0.0, t_star, true, false);
    }
    return rows;
}

std::string bound_report_to_csv(const std::vector<BoundReportRow>& rows) {
    std::ostringstream out;
    out << "quantity,instance_id,value,bound,satisfied\n";
    for (const auto& r : rows) {
        out << r.quantity << ',' << r.instance_id << ','
            << (r.has_value ? fmt_double(r.value) : std::string("")) << ','
            << fmt_double(r.bound) << ',' << (r.satisfied ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace graphwalk

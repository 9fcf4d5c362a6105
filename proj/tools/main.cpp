#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "graphwalk/analysis.hpp"
#include "graphwalk/bench.hpp"
#include "graphwalk/graph.hpp"
#include "graphwalk/spectral.hpp"
#include "graphwalk/walkers.hpp"

namespace fs = std::filesystem;
using namespace graphwalk;

namespace {

struct GraphSpec {
    std::string family = "grid";
    int rows = 32, cols = 32;
    int n = 1000;
    double p = -1.0;  // < 0 resolves to 1.1 ln(n) / n
    int m = 3;
    std::uint64_t seed = 0;
};

void add_graph_options(CLI::App* cmd, GraphSpec& spec) {
    cmd->add_option("--family", spec.family, "grid | er | ba")
        ->check(CLI::IsMember({"grid", "er", "ba"}));
    cmd->add_option("--rows", spec.rows, "grid rows");
    cmd->add_option("--cols", spec.cols, "grid cols");
    cmd->add_option("--n", spec.n, "vertex count (er/ba)");
    cmd->add_option("--p", spec.p, "er edge probability; default 1.1*ln(n)/n");
    cmd->add_option("--m", spec.m, "ba attachment count");
    cmd->add_option("--graph-seed", spec.seed, "generator seed");
}

Graph build_graph(const GraphSpec& spec) {
    if (spec.family == "grid") return grid_graph(spec.rows, spec.cols);
    if (spec.family == "er") {
        double p = spec.p > 0 ? spec.p : 1.1 * std::log(spec.n) / spec.n;
        return erdos_renyi(spec.n, p, spec.seed);
    }
    return barabasi_albert(spec.n, spec.m, spec.seed);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

WalkKernel build_kernel(const Graph& g, const Eigen::VectorXd& f,
                        const SpectralBasis& basis, const std::string& walker,
                        double gamma, int k, double eps) {
    if (walker == "vanilla") return WalkKernel::vanilla(g, f);
    if (walker == "exp") return WalkKernel::exponential(g, f, gamma);
    CoherenceProfile coh = coherence_profile(basis, k);
    return WalkKernel::laplacian(g, f, coh, eps);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local random-walk maximization of smooth graph functions"};
    app.require_subcommand(1);

    // generate-graph
    GraphSpec gen_spec;
    std::string gen_out = "graph.edges";
    auto* gen = app.add_subcommand("generate-graph", "Generate a graph and write its edge list");
    add_graph_options(gen, gen_spec);
    gen->add_option("-o,--out", gen_out, "output edge-list path");
    gen->callback([&]() {
        Graph g = build_graph(gen_spec);
        save_graph_file(g, gen_out);
        std::cout << "n=" << g.n << " edges=" << g.edge_count()
                  << " diameter=" << diameter(g) << "\n";
    });

    // synth-function
    std::string synth_graph, synth_out = "function.csv";
    int synth_k = 10;
    std::uint64_t synth_seed = 0;
    double synth_margin = -1.0;
    auto* synth = app.add_subcommand("synth-function", "Sample a random k-smooth function");
    synth->add_option("--graph", synth_graph, "edge-list file")->required();
    synth->add_option("-k", synth_k, "smoothness order")->required();
    synth->add_option("--seed", synth_seed, "sampling seed");
    synth->add_option("--margin", synth_margin,
                      "positivity margin; default 1e-3 * function range");
    synth->add_option("-o,--out", synth_out, "output CSV path");
    synth->callback([&]() {
        Graph g = load_graph_file(synth_graph);
        SpectralBasis basis = eigendecompose(laplacian(g));
        GraphFunction fn = synth_margin < 0
                               ? synth_smooth(basis, synth_k, synth_seed)
                               : synth_smooth(basis, synth_k, synth_seed, synth_margin);
        save_function_file(fn.values, synth_out);
        std::cout << "n=" << g.n << " k=" << synth_k
                  << " min=" << fn.values.minCoeff()
                  << " max=" << fn.values.maxCoeff() << "\n";
    });

    // bench
    GraphSpec bench_spec;
    ExperimentConfig cfg;
    std::string out_dir = "results";
    auto* bench = app.add_subcommand("bench", "Hitting-time sweep over k and walkers");
    bench->set_config("--config", "", "key=value config file (flags take precedence)");
    add_graph_options(bench, bench_spec);
    bench->add_option("--k", cfg.ks, "k values")->delimiter(',');
    bench->add_option("--gammas", cfg.gammas, "gamma values for the exponential walk")
        ->delimiter(',');
    bench->add_option("--functions", cfg.functions, "functions per k");
    bench->add_option("--trials", cfg.trials, "trials per function");
    bench->add_option("--cap", cfg.step_cap, "step cap per walk");
    bench->add_option("--master-seed", cfg.master_seed, "master seed");
    bench->add_option("--threads", cfg.threads, "worker threads");
    bench->add_option("--target-quantile", cfg.target_quantile,
                      "hit threshold quantile; 1.0 = global maximum");
    bench->add_option("--eps", cfg.eps,
                      "proposal smoothing for the laplacian walker; 0 = exact variant");
    bench->add_flag("--eps-walker", cfg.include_eps_walker,
                    "also run the eps-approximate laplacian walker");
    bench->add_flag("--no-vanilla{false}", cfg.include_vanilla, "skip the vanilla walker");
    bench->add_flag("--no-laplacian{false}", cfg.include_laplacian,
                    "skip the laplacian walker");
    bench->add_flag("--timing", cfg.timing, "record per-trial wall time (breaks byte determinism)");
    bench->add_option("--out-dir", out_dir, "output directory");
    bench->callback([&]() {
        Graph g = build_graph(bench_spec);
        SpectralBasis basis = eigendecompose(laplacian(g));
        auto rows = run_bench(g, bench_spec.family, basis, cfg);
        fs::create_directories(out_dir);
        write_file(out_dir + "/results.csv", results_to_csv(rows));
        write_file(out_dir + "/summary.csv", summary_to_csv(summarize(rows)));
        std::cout << "wrote " << rows.size() << " rows to " << out_dir
                  << "/results.csv\n";
    });

    // bounds
    std::string bounds_graph, bounds_fn, bounds_out = "bounds.csv";
    std::string bounds_walker = "exp";
    double bounds_gamma = 1.0, bounds_eps = 0.0;
    int bounds_k = 10, bounds_tmax = 200, bounds_cap = 256;
    auto* bounds = app.add_subcommand("bounds", "Theory bounds vs exact oracles for one instance");
    bounds->add_option("--graph", bounds_graph, "edge-list file")->required();
    bounds->add_option("--function", bounds_fn, "function CSV")->required();
    bounds->add_option("--walker", bounds_walker, "exp | laplacian")
        ->check(CLI::IsMember({"exp", "laplacian"}));
    bounds->add_option("--gamma", bounds_gamma, "gamma (exp walker)");
    bounds->add_option("-k", bounds_k, "smoothness order (laplacian walker)");
    bounds->add_option("--eps", bounds_eps, "coherence smoothing eps");
    bounds->add_option("--t-max", bounds_tmax, "largest t for TV samples");
    bounds->add_option("--oracle-cap", bounds_cap, "max n for exact columns");
    bounds->add_option("-o,--out", bounds_out, "output CSV path");
    bounds->callback([&]() {
        Graph g = load_graph_file(bounds_graph);
        Eigen::VectorXd f = load_function_file(bounds_fn);
        SpectralBasis basis = eigendecompose(laplacian(g));
        WalkKernel kernel =
            build_kernel(g, f, basis, bounds_walker, bounds_gamma, bounds_k, bounds_eps);
        auto report = bound_report(g, kernel, bounds_walker, bounds_tmax, bounds_cap);
        write_file(bounds_out, bound_report_to_csv(report));
        std::cout << "wrote " << report.size() << " rows to " << bounds_out << "\n";
    });

    // plot
    std::string plot_results_path, plot_dir = ".";
    auto* plot = app.add_subcommand("plot", "Render SVG hitting-time comparisons from a results CSV");
    plot->add_option("--results", plot_results_path, "results CSV")->required();
    plot->add_option("--out-dir", plot_dir, "output directory");
    plot->callback([&]() {
        std::ifstream in(plot_results_path);
        if (!in) throw std::runtime_error("cannot open " + plot_results_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        auto svgs = plot_results(results_from_csv(ss.str()));
        fs::create_directories(plot_dir);
        for (const auto& [family, svg] : svgs) {
            std::string path = plot_dir + "/hitting_times_" + family + ".svg";
            write_file(path, svg);
            std::cout << "wrote " << path << "\n";
        }
    });

    // walk
    std::string walk_graph, walk_fn, walk_out = "trace.csv";
    std::string walk_walker = "exp";
    double walk_gamma = 1.0, walk_eps = 0.0;
    int walk_k = 10;
    std::int64_t walk_steps = 1000;
    std::uint64_t walk_seed = 0;
    auto* walk = app.add_subcommand("walk", "Run a single walk and dump the trace");
    walk->add_option("--graph", walk_graph, "edge-list file")->required();
    walk->add_option("--function", walk_fn, "function CSV")->required();
    walk->add_option("--walker", walk_walker, "vanilla | exp | laplacian")
        ->check(CLI::IsMember({"vanilla", "exp", "laplacian"}));
    walk->add_option("--gamma", walk_gamma, "gamma (exp walker)");
    walk->add_option("-k", walk_k, "smoothness order (laplacian walker)");
    walk->add_option("--eps", walk_eps, "coherence smoothing eps");
    walk->add_option("--steps", walk_steps, "number of steps");
    walk->add_option("--seed", walk_seed, "walk seed");
    walk->add_option("-o,--out", walk_out, "output trace CSV");
    walk->callback([&]() {
        Graph g = load_graph_file(walk_graph);
        Eigen::VectorXd f = load_function_file(walk_fn);
        SpectralBasis basis = eigendecompose(laplacian(g));
        WalkKernel kernel =
            build_kernel(g, f, basis, walk_walker, walk_gamma, walk_k, walk_eps);
        WalkTrace trace = run_walk(kernel, walk_steps, walk_seed, RecordPolicy::Full);
        write_file(walk_out, trace_to_csv(trace, f));
        std::cout << "start=" << trace.start << " i_max=" << trace.i_max
                  << " f_max=" << trace.f_max << " t_hit="
                  << (trace.capped() ? std::string("capped")
                                     : std::to_string(trace.t_hit))
                  << "\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

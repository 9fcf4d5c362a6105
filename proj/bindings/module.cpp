#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphwalk/analysis.hpp"
#include "graphwalk/bench.hpp"
#include "graphwalk/graph.hpp"
#include "graphwalk/rng.hpp"
#include "graphwalk/spectral.hpp"
#include "graphwalk/target.hpp"
#include "graphwalk/walkers.hpp"

namespace py = pybind11;
using namespace graphwalk;

PYBIND11_MODULE(_graphwalk, m) {
    m.doc() = "Local random walks for maximizing smooth functions on graphs";

    // ---- graphs ----
    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("degree", &Graph::degree)
        .def_readonly("d_max", &Graph::d_max)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edge_count", &Graph::edge_count)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });
    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
    m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("barabasi_albert", &barabasi_albert, py::arg("n"), py::arg("m"),
          py::arg("seed"));
    m.def("diameter", &diameter, py::arg("g"));
    m.def("load_graph", &load_graph, py::arg("text"));
    m.def("save_graph", &save_graph, py::arg("g"));
    m.def("load_graph_file", &load_graph_file, py::arg("path"));
    m.def("save_graph_file", &save_graph_file, py::arg("g"), py::arg("path"));

    // ---- spectral ----
    m.def("laplacian", &laplacian, py::arg("g"));
    py::class_<SpectralBasis>(m, "SpectralBasis")
        .def_readonly("eigenvalues", &SpectralBasis::eigenvalues)
        .def_readonly("eigenvectors", &SpectralBasis::eigenvectors)
        .def("n", &SpectralBasis::n)
        .def("band", &SpectralBasis::band, py::arg("k"));
    m.def("eigendecompose", &eigendecompose, py::arg("L"));
    py::class_<CoherenceProfile>(m, "CoherenceProfile")
        .def_readonly("k", &CoherenceProfile::k)
        .def_readonly("c", &CoherenceProfile::c);
    m.def("coherence_profile", &coherence_profile, py::arg("basis"), py::arg("k"));
    py::class_<GraphFunction>(m, "GraphFunction")
        .def_readonly("values", &GraphFunction::values)
        .def_readonly("k", &GraphFunction::k)
        .def_readonly("alpha", &GraphFunction::alpha)
        .def_readonly("lift", &GraphFunction::lift);
    m.def(
        "synth_smooth",
        [](const SpectralBasis& basis, int k, std::uint64_t seed) {
            return synth_smooth(basis, k, seed);
        },
        py::arg("basis"), py::arg("k"), py::arg("seed"));
    m.def(
        "synth_smooth",
        [](const SpectralBasis& basis, int k, std::uint64_t seed, double margin) {
            return synth_smooth(basis, k, seed, margin);
        },
        py::arg("basis"), py::arg("k"), py::arg("seed"),
        py::arg("positivity_margin"));
    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("smooth", &Decomposition::smooth)
        .def_readonly("residual", &Decomposition::residual)
        .def_readonly("eps_min", &Decomposition::eps_min);
    m.def("decompose", &decompose, py::arg("f"), py::arg("basis"), py::arg("k"));
    m.def("save_function", &save_function, py::arg("f"));
    m.def("load_function", &load_function, py::arg("text"));
    m.def("save_function_file", &save_function_file, py::arg("f"), py::arg("path"));
    m.def("load_function_file", &load_function_file, py::arg("path"));

    // ---- targets ----
    py::class_<TargetDensity>(m, "TargetDensity")
        .def_readonly("p", &TargetDensity::p)
        .def_readonly("delta_f", &TargetDensity::delta_f)
        .def_readonly("Delta_f", &TargetDensity::Delta_f)
        .def_readonly("form", &TargetDensity::form)
        .def_readonly("gamma", &TargetDensity::gamma);
    m.def("exponential_density", &exponential_density, py::arg("f"),
          py::arg("gamma"));
    m.def("squared_density", &squared_density, py::arg("f"));

    // ---- walkers ----
    py::enum_<WalkerKind>(m, "WalkerKind")
        .value("Vanilla", WalkerKind::Vanilla)
        .value("Exponential", WalkerKind::Exponential)
        .value("Laplacian", WalkerKind::Laplacian)
        .value("LaplacianEps", WalkerKind::LaplacianEps);
    py::class_<KernelRow>(m, "KernelRow")
        .def_readonly("neighbors", &KernelRow::neighbors)
        .def_readonly("prob", &KernelRow::prob)
        .def_readonly("self_prob", &KernelRow::self_prob);
    py::class_<WalkKernel>(m, "WalkKernel")
        .def_static("vanilla", &WalkKernel::vanilla, py::arg("g"), py::arg("f"),
                    py::keep_alive<0, 1>())
        .def_static("exponential", &WalkKernel::exponential, py::arg("g"),
                    py::arg("f"), py::arg("gamma"), py::keep_alive<0, 1>())
        .def_static("laplacian", &WalkKernel::laplacian, py::arg("g"), py::arg("f"),
                    py::arg("coherence"), py::arg("eps") = 0.0,
                    py::keep_alive<0, 1>())
        .def("row", &WalkKernel::row, py::arg("i"))
        .def("kind", &WalkKernel::kind)
        .def("f", &WalkKernel::f)
        .def("gamma", &WalkKernel::gamma)
        .def("eps", &WalkKernel::eps)
        .def("target", &WalkKernel::target)
        .def("name", &WalkKernel::name);
    py::enum_<RecordPolicy>(m, "RecordPolicy")
        .value("Full", RecordPolicy::Full)
        .value("CountersOnly", RecordPolicy::CountersOnly);
    py::class_<WalkTrace>(m, "WalkTrace")
        .def_readonly("seed", &WalkTrace::seed)
        .def_readonly("start", &WalkTrace::start)
        .def_readonly("path", &WalkTrace::path)
        .def_readonly("i_max", &WalkTrace::i_max)
        .def_readonly("f_max", &WalkTrace::f_max)
        .def_readonly("t_hit", &WalkTrace::t_hit)
        .def_readonly("steps", &WalkTrace::steps)
        .def("capped", &WalkTrace::capped);
    m.def("run_walk", &run_walk, py::arg("kernel"), py::arg("T"), py::arg("seed"),
          py::arg("policy") = RecordPolicy::Full,
          py::arg("hit_value") = std::numeric_limits<double>::quiet_NaN(),
          py::arg("stop_on_hit") = false);
    m.def("occupation_distribution", &occupation_distribution, py::arg("kernel"),
          py::arg("T"), py::arg("burn_in"), py::arg("seed"));
    m.def("trace_to_csv", &trace_to_csv, py::arg("trace"), py::arg("f"));

    // ---- bounds and oracles ----
    py::class_<BoundInputs>(m, "BoundInputs")
        .def_readonly("r", &BoundInputs::r)
        .def_readonly("d_max", &BoundInputs::d_max)
        .def_readonly("delta_f", &BoundInputs::delta_f)
        .def_readonly("Delta_f", &BoundInputs::Delta_f)
        .def_readonly("gamma", &BoundInputs::gamma)
        .def_readonly("f_max", &BoundInputs::f_max)
        .def_readonly("f_min", &BoundInputs::f_min)
        .def_readonly("M", &BoundInputs::M)
        .def_readonly("f_norm_sq", &BoundInputs::f_norm_sq)
        .def_readonly("n", &BoundInputs::n)
        .def_readonly("k", &BoundInputs::k)
        .def_readonly("eps", &BoundInputs::eps);
    m.def("bound_inputs", &bound_inputs, py::arg("kernel"), py::arg("diameter"));
    m.def("theta_exponential", &theta_exponential, py::arg("inputs"));
    m.def("theta_laplacian", &theta_laplacian, py::arg("inputs"));
    m.def("tv_bound_exponential", &tv_bound_exponential, py::arg("inputs"),
          py::arg("t"));
    m.def("tv_bound_laplacian", &tv_bound_laplacian, py::arg("inputs"), py::arg("t"));
    m.def("hitting_bound_exponential", &hitting_bound_exponential,
          py::arg("inputs"));
    m.def("hitting_bound_laplacian", &hitting_bound_laplacian, py::arg("inputs"));
    m.def("highprob_hitting_bound", &highprob_hitting_bound, py::arg("t_star"),
          py::arg("s"), py::arg("t"));
    m.def("dominance_M", &dominance_M, py::arg("k"), py::arg("n"), py::arg("eps"));
    m.def("dense_kernel", &dense_kernel, py::arg("kernel"), py::arg("cap") = 256);
    m.def("stationary_distribution", &stationary_distribution, py::arg("P"));
    m.def("exact_tv_curve", &exact_tv_curve, py::arg("P"), py::arg("p"),
          py::arg("t_max"));
    py::class_<HittingTimes>(m, "HittingTimes")
        .def_readonly("per_start", &HittingTimes::per_start)
        .def_readonly("uniform_start", &HittingTimes::uniform_start)
        .def_readonly("max_over_starts", &HittingTimes::max_over_starts);
    m.def("exact_expected_hitting", &exact_expected_hitting, py::arg("P"),
          py::arg("target"));
    m.def("argmax_set", &argmax_set, py::arg("f"));
    m.def("tv_distance", &tv_distance, py::arg("a"), py::arg("b"));
    m.def("detailed_balance_gap", &detailed_balance_gap, py::arg("kernel"));

    // ---- bench ----
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("ks", &ExperimentConfig::ks)
        .def_readwrite("gammas", &ExperimentConfig::gammas)
        .def_readwrite("include_vanilla", &ExperimentConfig::include_vanilla)
        .def_readwrite("include_laplacian", &ExperimentConfig::include_laplacian)
        .def_readwrite("include_eps_walker", &ExperimentConfig::include_eps_walker)
        .def_readwrite("functions", &ExperimentConfig::functions)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("step_cap", &ExperimentConfig::step_cap)
        .def_readwrite("master_seed", &ExperimentConfig::master_seed)
        .def_readwrite("threads", &ExperimentConfig::threads)
        .def_readwrite("target_quantile", &ExperimentConfig::target_quantile)
        .def_readwrite("timing", &ExperimentConfig::timing);
    py::class_<ResultRow>(m, "ResultRow")
        .def_readonly("family", &ResultRow::family)
        .def_readonly("n", &ResultRow::n)
        .def_readonly("k", &ResultRow::k)
        .def_readonly("algorithm", &ResultRow::algorithm)
        .def_readonly("param", &ResultRow::param)
        .def_readonly("func_idx", &ResultRow::func_idx)
        .def_readonly("trial_idx", &ResultRow::trial_idx)
        .def_readonly("seed", &ResultRow::seed)
        .def_readonly("t_hit", &ResultRow::t_hit)
        .def_readonly("capped", &ResultRow::capped)
        .def_readonly("wall_ns", &ResultRow::wall_ns);
    m.def("run_bench", &run_bench, py::arg("g"), py::arg("family"),
          py::arg("basis"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("results_to_csv", &results_to_csv, py::arg("rows"));
    m.def("results_from_csv", &results_from_csv, py::arg("text"));
    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("algorithm", &SummaryRow::algorithm)
        .def_readonly("param", &SummaryRow::param)
        .def_readonly("k", &SummaryRow::k)
        .def_readonly("mean_t_hit", &SummaryRow::mean_t_hit)
        .def_readonly("median_t_hit", &SummaryRow::median_t_hit)
        .def_readonly("cap_rate", &SummaryRow::cap_rate)
        .def_readonly("count", &SummaryRow::count);
    m.def("summarize", &summarize, py::arg("rows"));
    m.def("summary_to_csv", &summary_to_csv, py::arg("rows"));
    py::class_<BoundReportRow>(m, "BoundReportRow")
        .def_readonly("quantity", &BoundReportRow::quantity)
        .def_readonly("instance_id", &BoundReportRow::instance_id)
        .def_readonly("value", &BoundReportRow::value)
        .def_readonly("bound", &BoundReportRow::bound)
        .def_readonly("satisfied", &BoundReportRow::satisfied)
        .def_readonly("has_value", &BoundReportRow::has_value);
    m.def("bound_report", &bound_report, py::arg("g"), py::arg("kernel"),
          py::arg("instance_id"), py::arg("t_max") = 200,
          py::arg("oracle_cap") = 256);
    m.def("bound_report_to_csv", &bound_report_to_csv, py::arg("rows"));
    m.def("plot_results", &plot_results, py::arg("rows"));

    // ---- rng helpers ----
    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("a"),
          py::arg("b") = 0, py::arg("c") = 0);
}

#include "graphwalk/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "graphwalk/rng.hpp"

namespace graphwalk {

Eigen::MatrixXd laplacian(const Graph& g) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        L(i, i) = g.degree[i];
        for (int j : g.adj[i]) L(i, j) = -1.0;
    }
    return L;
}

SpectralBasis eigendecompose(const Eigen::MatrixXd& L) {
    if (L.rows() != L.cols()) throw std::invalid_argument("Laplacian must be square");
    if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("Laplacian must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition did not converge");
    SpectralBasis basis;
    basis.eigenvalues = solver.eigenvalues();
    basis.eigenvectors = solver.eigenvectors();
    // fix signs: first coordinate with |x| > 1e-12 made positive
    for (int c = 0; c < basis.eigenvectors.cols(); ++c) {
        for (int r = 0; r < basis.eigenvectors.rows(); ++r) {
            double x = basis.eigenvectors(r, c);
            if (std::abs(x) > 1e-12) {
                if (x < 0) basis.eigenvectors.col(c) *= -1.0;
                break;
            }
        }
    }
    return basis;
}

CoherenceProfile coherence_profile(const SpectralBasis& basis, int k) {
    if (k < 1 || k > basis.n())
        throw std::invalid_argument("coherence order k out of range");
    CoherenceProfile prof;
    prof.k = k;
    prof.c = basis.eigenvectors.leftCols(k).rowwise().norm();
    return prof;
}

GraphFunction synth_smooth(const SpectralBasis& basis, int k, std::uint64_t seed,
                           double positivity_margin) {
    if (k < 1 || k > basis.n()) throw std::invalid_argument("k out of range");
    if (positivity_margin < 0)
        throw std::invalid_argument("positivity_margin must be >= 0");
    Rng rng = make_rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd alpha(k);
    for (int i = 0; i < k; ++i) alpha(i) = normal(rng);
    GraphFunction fn;
    fn.k = k;
    fn.alpha = alpha;
    fn.values = basis.eigenvectors.leftCols(k) * alpha;
    fn.lift = positivity_margin - fn.values.minCoeff();
    fn.values.array() += fn.lift;
    return fn;
}

GraphFunction synth_smooth(const SpectralBasis& basis, int k, std::uint64_t seed) {
    if (k < 1 || k > basis.n()) throw std::invalid_argument("k out of range");
    Rng rng = make_rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd alpha(k);
    for (int i = 0; i < k; ++i) alpha(i) = normal(rng);
    Eigen::VectorXd raw = basis.eigenvectors.leftCols(k) * alpha;
    double margin = 1e-3 * (raw.maxCoeff() - raw.minCoeff());
    GraphFunction fn;
    fn.k = k;
    fn.alpha = alpha;
    fn.lift = margin - raw.minCoeff();
    fn.values = raw.array() + fn.lift;
    return fn;
}

Decomposition decompose(const Eigen::VectorXd& f, const SpectralBasis& basis, int k) {
    if (k < 1 || k > basis.n()) throw std::invalid_argument("k out of range");
    if (f.size() != basis.n()) throw std::invalid_argument("function length mismatch");
    Decomposition d;
    Eigen::MatrixXd Uk = basis.eigenvectors.leftCols(k);
    d.smooth = Uk * (Uk.transpose() * f);
    d.residual = f - d.smooth;
    double smooth_norm = d.smooth.norm();
    if (smooth_norm <= 1e-12 * f.norm())
        throw std::invalid_argument("decompose: smooth component is zero");
    d.eps_min = d.residual.cwiseAbs().maxCoeff() / smooth_norm;
    return d;
}

std::string save_function(const Eigen::VectorXd& f) {
    std::ostringstream out;
    out << "node,value\n";
    char buf[64];
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17e", f(i));
        out << i << ',' << buf << '\n';
    }
    return out.str();
}

Eigen::VectorXd load_function(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("node,value", 0) != 0)
        throw std::invalid_argument("function file: missing node,value header");
    std::vector<double> values;
    long expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("function file: malformed row: " + line);
        long node = std::stol(line.substr(0, comma));
        if (node != expected)
            throw std::invalid_argument("function file: node indices must be 0..n-1 ascending");
        values.push_back(std::stod(line.substr(comma + 1)));
        ++expected;
    }
    if (values.empty()) throw std::invalid_argument("function file: no rows");
    return Eigen::Map<Eigen::VectorXd>(values.data(),
                                       static_cast<Eigen::Index>(values.size()));
}

Eigen::VectorXd load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_function(ss.str());
}

void save_function_file(const Eigen::VectorXd& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << save_function(f);
}

}  // namespace graphwalk

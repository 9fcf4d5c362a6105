#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "graphwalk/graph.hpp"

namespace graphwalk {

/// Unnormalized Laplacian L = D - W.
Eigen::MatrixXd laplacian(const Graph& g);

/// Full symmetric eigendecomposition of the Laplacian, eigenvalues ascending,
/// eigenvectors orthonormal columns. Signs are fixed so that the first
/// coordinate of each eigenvector with magnitude above 1e-12 is positive.
struct SpectralBasis {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    int n() const { return static_cast<int>(eigenvalues.size()); }
    Eigen::MatrixXd band(int k) const { return eigenvectors.leftCols(k); }
};

SpectralBasis eigendecompose(const Eigen::MatrixXd& L);

/// Per-vertex local cumulative coherence of order k: c_i = ||U_k^T delta_i||_2,
/// i.e. the norm of row i of U_k.
struct CoherenceProfile {
    int k = 0;
    Eigen::VectorXd c;
};

CoherenceProfile coherence_profile(const SpectralBasis& basis, int k);

/// Real-valued function on the vertices, with synthesis metadata when built
/// by synth_smooth.
struct GraphFunction {
    Eigen::VectorXd values;
    int k = 0;                // band order when synthesized, 0 = unknown
    Eigen::VectorXd alpha;    // band coefficients before the lift
    double lift = 0.0;        // constant added to make the function positive
};

/// f = U_k alpha with alpha ~ N(0,1)^k from the seeded stream, lifted so that
/// min_i f_i = positivity_margin. Exactly k-smooth for k >= 1 since the
/// constant vector lies in the span of u_1.
GraphFunction synth_smooth(const SpectralBasis& basis, int k, std::uint64_t seed,
                           double positivity_margin);

/// Margin defaults to 1e-3 * (max f - min f) before the lift.
GraphFunction synth_smooth(const SpectralBasis& basis, int k, std::uint64_t seed);

struct Decomposition {
    Eigen::VectorXd smooth;    // U_k U_k^T f
    Eigen::VectorXd residual;  // f - smooth
    double eps_min = 0.0;      // max_i |residual_i| / ||smooth||_2
};

/// Band/residual split of f against the lowest k modes. Throws when the
/// smooth component is zero (eps undefined).
Decomposition decompose(const Eigen::VectorXd& f, const SpectralBasis& basis, int k);

/// Function file format: CSV "node,value", rows 0..n-1 ascending, 17
/// significant digits.
std::string save_function(const Eigen::VectorXd& f);
Eigen::VectorXd load_function(const std::string& text);
Eigen::VectorXd load_function_file(const std::string& path);
void save_function_file(const Eigen::VectorXd& f, const std::string& path);

}  // namespace graphwalk

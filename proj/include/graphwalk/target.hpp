#pragma once

#include <Eigen/Dense>

namespace graphwalk {

enum class DensityForm { Exponential, Squared };

/// Normalized target density over vertices, with the extremal values used by
/// the convergence and hitting-time bounds.
struct TargetDensity {
    Eigen::VectorXd p;
    double delta_f = 0.0;  // min_i p(i)
    double Delta_f = 0.0;  // max_i p(i)
    DensityForm form = DensityForm::Exponential;
    double gamma = 0.0;    // only meaningful for the exponential form
};

/// p(i) = exp(gamma * f_i) / sum_j exp(gamma * f_j), max-subtracted for
/// stability. gamma = 0 gives the uniform distribution.
TargetDensity exponential_density(const Eigen::VectorXd& f, double gamma);

/// p(i) = f_i^2 / ||f||_2^2. Requires f_i > 0 everywhere so that
/// argmax p = argmax f.
TargetDensity squared_density(const Eigen::VectorXd& f);

}  // namespace graphwalk

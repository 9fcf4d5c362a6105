#include "graphwalk/target.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphwalk {

namespace {

void finalize(TargetDensity& t) {
    t.p /= t.p.sum();
    t.delta_f = t.p.minCoeff();
    t.Delta_f = t.p.maxCoeff();
}

}  // namespace

TargetDensity exponential_density(const Eigen::VectorXd& f, double gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    if (!f.allFinite()) throw std::invalid_argument("function has non-finite values");
    TargetDensity t;
    t.form = DensityForm::Exponential;
    t.gamma = gamma;
    double fmax = f.maxCoeff();
    t.p = ((f.array() - fmax) * gamma).exp();
    finalize(t);
    return t;
}

TargetDensity squared_density(const Eigen::VectorXd& f) {
    if (!f.allFinite()) throw std::invalid_argument("function has non-finite values");
    for (Eigen::Index i = 0; i < f.size(); ++i)
        if (f(i) <= 0)
            throw std::invalid_argument("squared_density requires f > 0; f(" +
                                        std::to_string(i) + ") = " +
                                        std::to_string(f(i)));
    TargetDensity t;
    t.form = DensityForm::Squared;
    t.p = f.array().square();
    finalize(t);
    return t;
}

}  // namespace graphwalk

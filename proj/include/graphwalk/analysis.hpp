#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "graphwalk/target.hpp"
#include "graphwalk/walkers.hpp"

namespace graphwalk {

/// Everything the bound formulas consume, gathered from a concrete
/// (graph, function, walker) instance.
struct BoundInputs {
    int r = 1;          // graph diameter
    int d_max = 1;
    double delta_f = 0;  // min target probability
    double Delta_f = 0;  // max target probability
    double gamma = 0;
    double f_max = 0;
    double f_min = 0;
    double M = 1;        // dominance constant
    double f_norm_sq = 0;  // ||f||_2^2
    int n = 0;
    int k = 0;
    double eps = 0;
};

BoundInputs bound_inputs(const WalkKernel& kernel, int diameter);

/// theta = 1 - delta_f^(r-1) / (d_max * Delta_f)^r, clamped at 0.
double theta_exponential(const BoundInputs& inp);
/// theta = 1 - delta_f^(r-1) / M^r, clamped at 0.
double theta_laplacian(const BoundInputs& inp);

/// TV convergence bound theta^floor(t/r).
double tv_bound_exponential(const BoundInputs& inp, std::int64_t t);
double tv_bound_laplacian(const BoundInputs& inp, std::int64_t t);

/// E[T_hit] <= d_max^r * exp(gamma (r-1) (f_max - f_min)).
double hitting_bound_exponential(const BoundInputs& inp);
/// E[T_hit] <= (M ||f||^2)^r / (f_max^2 * f_min^(2(r-1))).
double hitting_bound_laplacian(const BoundInputs& inp);

/// P[T_hit > t] <= min(1, (t_star / s)^floor(t/s)).
double highprob_hitting_bound(double t_star, double s, double t);

/// Dominance constant: k when eps = 0, else k + 2k sqrt(n) eps + n eps^2.
double dominance_M(int k, int n, double eps);

/// Oracle materialization of the full transition matrix. Throws when n
/// exceeds the cap.
Eigen::MatrixXd dense_kernel(const WalkKernel& kernel, int cap = 256);

/// Stationary distribution of a row-stochastic matrix by direct linear solve
/// of pi^T P = pi^T with sum(pi) = 1.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& P);

/// max over start vertices of TV(P^t_{i*}, p), for t = 0..t_max.
std::vector<double> exact_tv_curve(const Eigen::MatrixXd& P,
                                   const Eigen::VectorXd& p, int t_max);

struct HittingTimes {
    Eigen::VectorXd per_start;  // expected steps to reach the target set
    double uniform_start = 0;
    double max_over_starts = 0;
};

/// First-step linear system: h_i = 0 on the target set,
/// h_i = 1 + sum_j P_ij h_j elsewhere.
HittingTimes exact_expected_hitting(const Eigen::MatrixXd& P,
                                    const std::vector<int>& target);

/// All vertices attaining the maximum of f.
std::vector<int> argmax_set(const Eigen::VectorXd& f);

double tv_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Max over edges of |p(i) P_ij - p(j) P_ji|; zero for a reversible kernel.
double detailed_balance_gap(const WalkKernel& kernel);

}  // namespace graphwalk

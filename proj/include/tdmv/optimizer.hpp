#pragma once

#include <vector>

#include "tdmv/autocov.hpp"
#include "tdmv/strategy.hpp"

namespace tdmv {

/// Return and risk conventions
/// ---------------------------
/// The strategy return over the horizon is R_T(pi | x0) = sum_t pi_t (x0 - x_t):
/// positive weights profit from prices falling below the reference price x0.
/// This inverts the naive long-position intuition — against an upward drift,
/// strategies with positive expected return are net short. The expected
/// return of a normalized strategy is mu_S = x0 - pi'mu, and its risk is
/// sqrt(pi' Sigma pi) with Sigma the price-level auto-covariance matrix.
///
/// All solvers reject matrices whose 2-norm condition estimate exceeds
/// 1e12 (or that are numerically indefinite) with IllConditionedError;
/// cleaning, not silent regularization, is the remedy for noisy matrices.

/// Unconstrained minimum-variance strategy pi = Sigma^-1 1 / (1' Sigma^-1 1).
Strategy global_minimum_strategy(const AutoCovMatrix& sigma);

/// Minimum-variance strategy subject to pi'1 = 1 and pi'mu = x0 - mu_S:
/// pi = lambda1 Sigma^-1 1 + lambda2 Sigma^-1 mu, the multipliers solving
///   a11 lambda1 + a12 lambda2 = 1
///   a12 lambda1 + a22 lambda2 = x0 - mu_S
/// with a11 = 1'Sigma^-1 1, a12 = 1'Sigma^-1 mu, a22 = mu'Sigma^-1 mu.
/// Throws DegenerateConstraintError when mu is numerically proportional to
/// the ones vector (determinant below 1e-12 * a11 * a22); use
/// global_minimum_strategy instead in that case.
Strategy constrained_strategy(const AutoCovMatrix& sigma, const DriftVector& mu,
                              double mu_S, double x0);

/// One frontier point per target return. The risk at m = x0 - mu_S is
/// sqrt((a11 m^2 - 2 a12 m + a22) / (a11 a22 - a12^2)), which coincides
/// with sqrt(pi' Sigma pi) of the returned strategy.
std::vector<FrontierPoint> frontier(const AutoCovMatrix& sigma, const DriftVector& mu,
                                    double x0, const std::vector<double>& targets);

/// Evaluates sqrt(pi' S pi) of one strategy against the estimation
/// window's matrix, an all-window average, and the next window's matrix.
RiskTriple evaluate_risk(const Strategy& strategy, const AutoCovMatrix& in_sample,
                         const AutoCovMatrix& reference, const AutoCovMatrix& out_sample);

/// Quadratic-form risk sqrt(pi' S pi) of a strategy on one matrix.
double strategy_risk(const Strategy& strategy, const AutoCovMatrix& sigma);

namespace detail {

/// Symmetric solver shared by the optimizer entry points: eigendecomposition
/// with a condition check, solves refined with extended-precision residuals
/// so closed-form comparisons hold to ~1e-12 even near the condition limit.
class SymmetricSolver {
public:
    explicit SymmetricSolver(const AutoCovMatrix& sigma,
                             double max_condition = 1e12);

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
    double condition() const { return condition_; }

private:
    const Eigen::MatrixXd& a_;
    Eigen::MatrixXd eigvecs_;
    Eigen::VectorXd eigvals_;
    double condition_ = 0.0;
};

}  // namespace detail

}  // namespace tdmv

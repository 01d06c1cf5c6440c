#include "tdmv/optimizer.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tdmv {
namespace detail {

namespace {

/// Residual b - A x accumulated in long double.
Eigen::VectorXd refined_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& b) {
    const int n = static_cast<int>(a.rows());
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) {
        long double acc = static_cast<long double>(b(i));
        for (int j = 0; j < n; ++j) {
            acc -= static_cast<long double>(a(i, j)) * static_cast<long double>(x(j));
        }
        r(i) = static_cast<double>(acc);
    }
    return r;
}

}  // namespace

SymmetricSolver::SymmetricSolver(const AutoCovMatrix& sigma, double max_condition)
    : a_(sigma.entries) {
    sigma.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_);
    if (es.info() != Eigen::Success) {
        throw IllConditionedError("eigendecomposition failed",
                                  std::numeric_limits<double>::infinity());
    }
    eigvals_ = es.eigenvalues();
    eigvecs_ = es.eigenvectors();

    const double lmax = eigvals_.maxCoeff();
    const double lmin = eigvals_.minCoeff();
    condition_ = (lmin > 0.0) ? lmax / lmin : std::numeric_limits<double>::infinity();
    if (!(lmin > 0.0) || condition_ > max_condition) {
        throw IllConditionedError(
            "covariance matrix is numerically singular or indefinite "
            "(condition estimate " +
                std::to_string(condition_) + ")",
            condition_);
    }
}

Eigen::VectorXd SymmetricSolver::solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x =
        eigvecs_ * (eigvals_.cwiseInverse().asDiagonal() * (eigvecs_.transpose() * rhs));
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd r = refined_residual(a_, x, rhs);
        x += eigvecs_ *
             (eigvals_.cwiseInverse().asDiagonal() * (eigvecs_.transpose() * r));
    }
    return x;
}

}  // namespace detail

namespace {

void require_price_level(const AutoCovMatrix& sigma, const char* op) {
    if (sigma.layer != Layer::PriceLevel) {
        throw LayerMismatchError(std::string(op) +
                                 " expects a price-level matrix; apply p_transform first");
    }
}

struct ConstraintMoments {
    Eigen::VectorXd sigma_inv_ones;
    Eigen::VectorXd sigma_inv_mu;
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;
    double det = 0.0;
};

ConstraintMoments constraint_moments(const detail::SymmetricSolver& solver,
                                     const Eigen::VectorXd& mu, int T) {
    ConstraintMoments m;
    m.sigma_inv_ones = solver.solve(Eigen::VectorXd::Ones(T));
    m.sigma_inv_mu = solver.solve(mu);
    m.a11 = m.sigma_inv_ones.sum();
    m.a12 = m.sigma_inv_mu.sum();
    m.a22 = mu.dot(m.sigma_inv_mu);
    m.det = m.a11 * m.a22 - m.a12 * m.a12;
    if (!(m.det > 1e-12 * m.a11 * m.a22)) {
        throw DegenerateConstraintError(
            "drift is proportional to the ones vector; the target-return "
            "constraint is degenerate, use global_minimum_strategy");
    }
    return m;
}

Strategy strategy_from_multipliers(const ConstraintMoments& m, double lambda1,
                                   double lambda2, double mu_S, double x0) {
    Strategy s;
    s.weights = lambda1 * m.sigma_inv_ones + lambda2 * m.sigma_inv_mu;
    s.lambda1 = lambda1;
    s.lambda2 = lambda2;
    s.target_return = mu_S;
    s.x0 = x0;
    return s;
}

}  // namespace

Strategy global_minimum_strategy(const AutoCovMatrix& sigma) {
    require_price_level(sigma, "global_minimum_strategy");
    detail::SymmetricSolver solver(sigma);
    const int T = sigma.dim();
    const Eigen::VectorXd u = solver.solve(Eigen::VectorXd::Ones(T));
    const double a11 = u.sum();

    Strategy s;
    s.weights = u / a11;
    s.lambda1 = 1.0 / a11;
    s.lambda2 = 0.0;
    return s;
}

Strategy constrained_strategy(const AutoCovMatrix& sigma, const DriftVector& mu,
                              double mu_S, double x0) {
    require_price_level(sigma, "constrained_strategy");
    const int T = sigma.dim();
    if (mu.mu.size() != T) {
        throw SizeError("drift vector length " + std::to_string(mu.mu.size()) +
                        " does not match matrix dimension " + std::to_string(T));
    }
    detail::SymmetricSolver solver(sigma);
    const ConstraintMoments m = constraint_moments(solver, mu.mu, T);

    const double target = x0 - mu_S;
    const double lambda1 = (m.a22 - m.a12 * target) / m.det;
    const double lambda2 = (m.a11 * target - m.a12) / m.det;
    return strategy_from_multipliers(m, lambda1, lambda2, mu_S, x0);
}

std::vector<FrontierPoint> frontier(const AutoCovMatrix& sigma, const DriftVector& mu,
                                    double x0, const std::vector<double>& targets) {
    require_price_level(sigma, "frontier");
    const int T = sigma.dim();
    if (mu.mu.size() != T) {
        throw SizeError("drift vector length does not match matrix dimension");
    }
    detail::SymmetricSolver solver(sigma);
    const ConstraintMoments m = constraint_moments(solver, mu.mu, T);

    std::vector<FrontierPoint> points;
    points.reserve(targets.size());
    for (double mu_S : targets) {
        const double t = x0 - mu_S;
        const double lambda1 = (m.a22 - m.a12 * t) / m.det;
        const double lambda2 = (m.a11 * t - m.a12) / m.det;
        FrontierPoint p;
        p.target_return = mu_S;
        p.risk = std::sqrt((m.a11 * t * t - 2.0 * m.a12 * t + m.a22) / m.det);
        p.strategy = strategy_from_multipliers(m, lambda1, lambda2, mu_S, x0);
        points.push_back(std::move(p));
    }
    return points;
}

double strategy_risk(const Strategy& strategy, const AutoCovMatrix& sigma) {
    if (sigma.dim() != strategy.horizon()) {
        throw SizeError("strategy length " + std::to_string(strategy.horizon()) +
                        " does not match matrix dimension " + std::to_string(sigma.dim()));
    }
    const double var = strategy.weights.dot(sigma.entries * strategy.weights);
    return std::sqrt(std::max(var, 0.0));
}

RiskTriple evaluate_risk(const Strategy& strategy, const AutoCovMatrix& in_sample,
                         const AutoCovMatrix& reference, const AutoCovMatrix& out_sample) {
    RiskTriple r;
    r.in_sample = strategy_risk(strategy, in_sample);
    r.true_risk = strategy_risk(strategy, reference);
    r.out_of_sample = strategy_risk(strategy, out_sample);
    return r;
}

}  // namespace tdmv

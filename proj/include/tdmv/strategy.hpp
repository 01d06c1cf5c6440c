#pragma once

#include <optional>

#include <Eigen/Dense>

namespace tdmv {

/// Normalized trading strategy: weights over the risk horizon plus the
/// Lagrange multipliers of the normalization (lambda1) and target-return
/// (lambda2) constraints. Positive weights profit from price declines
/// relative to the reference price x0 (see optimizer.hpp).
struct Strategy {
    Eigen::VectorXd weights;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::optional<double> target_return;  ///< mu_S, when constrained
    std::optional<double> x0;             ///< reference price, when constrained

    int horizon() const { return static_cast<int>(weights.size()); }
};

/// Expected prices mu_t over the risk horizon.
struct DriftVector {
    Eigen::VectorXd mu;

    /// Linear drift mu_t = slope * t, t = 1..T.
    static DriftVector linear(double slope, int T) {
        Eigen::VectorXd mu(T);
        for (int t = 0; t < T; ++t) mu(t) = slope * static_cast<double>(t + 1);
        return DriftVector{std::move(mu)};
    }
};

struct FrontierPoint {
    double target_return = 0.0;  ///< mu_S
    double risk = 0.0;           ///< std deviation of the strategy return
    Strategy strategy;
};

/// Strategy risk evaluated against three different matrices: the
/// estimation window's own, an all-window average (proxy for the truth),
/// and the following window's.
struct RiskTriple {
    double in_sample = 0.0;
    double true_risk = 0.0;
    double out_of_sample = 0.0;
};

}  // namespace tdmv

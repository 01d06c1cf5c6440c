#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tdmv/process.hpp"
#include "tdmv/strategy.hpp"

namespace tdmv {

/// Sampling-noise sweep: for each aspect ratio alpha = T/M, estimate
/// auto-covariance matrices from `samples` independent realizations and
/// aggregate the resulting optimal strategies and risks.
struct ExperimentConfig {
    ProcessSpec spec;
    int T = 10;
    std::vector<double> alphas;   ///< each > 0; M = round(T/alpha) must be >= 2
    int samples = 1000;           ///< realizations per alpha
    std::vector<double> targets;  ///< mu_S values; empty = global minimum only
    double x0 = 0.0;
    std::uint64_t seed = 0;
    bool reestimate_drift = false;  ///< re-fit the trend per sample instead of
                                    ///< using the spec's known drift_slope
    int threads = 0;                ///< 0 = TDMV_THREADS / hardware

    void validate() const;
    int sample_size_for(double alpha) const;  ///< round(T / alpha)
};

/// Per-alpha aggregate of one strategy family (global minimum or one
/// target): per-weight mean and standard deviation, and in-sample risk
/// statistics across samples.
struct StrategyAggregate {
    std::optional<double> target;  ///< nullopt = global minimum
    Eigen::VectorXd mean_weights;
    Eigen::VectorXd std_weights;
    double mean_risk = 0.0;
    double std_risk = 0.0;
};

struct AlphaResult {
    double alpha = 0.0;
    std::optional<int> M;  ///< absent for the alpha = 0 reference row
    int samples = 0;       ///< successful samples aggregated
    int failures = 0;      ///< realizations rejected by the solver
    StrategyAggregate global_minimum;
    std::vector<StrategyAggregate> per_target;
};

struct ExperimentReport {
    ExperimentConfig config;
    AlphaResult reference;  ///< alpha = 0 row computed from the true matrix
    std::vector<AlphaResult> rows;
    double wall_seconds = 0.0;
};

/// Runs the sweep. Samples within an alpha level are evaluated in parallel
/// with per-sample seeds derived from (seed, alpha index, sample index);
/// aggregation uses pairwise summation over sample slots, so the report is
/// identical for any thread count. Solver failures (singular small-M
/// matrices) are tallied per alpha, not fatal.
ExperimentReport run_alpha_sweep(const ExperimentConfig& config);

/// Per-weight sample mean and standard deviation (M-1 denominator) of a
/// nonempty, equal-length strategy list. A single strategy yields zero
/// standard deviations.
std::pair<Eigen::VectorXd, Eigen::VectorXd> aggregate_strategies(
    const std::vector<Strategy>& strategies);

}  // namespace tdmv

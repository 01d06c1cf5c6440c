#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdmv/types.hpp"

namespace tdmv {

/// Parametric description of a synthetic process. Depending on `layer` the
/// generated fluctuations describe the price itself or its increments.
struct ProcessSpec {
    ProcessKind kind = ProcessKind::WhiteNoise;
    double a = 0.0;        ///< AR coefficient, |a| < 1
    double sigma2 = 1.0;   ///< variance of the fluctuations
    Layer layer = Layer::PriceLevel;
    double drift_slope = 0.0;  ///< b in mu_t = b * t

    /// Throws ValidationError unless |a| < 1, sigma2 > 0, and a == 0 for
    /// white noise.
    void validate() const;
};

struct SamplePath {
    std::vector<double> values;
    Layer layer = Layer::PriceLevel;
    std::optional<ProcessSpec> spec;  ///< generating spec, when synthetic
    std::uint64_t seed = 0;

    std::size_t size() const { return values.size(); }
};

/// Draws n fluctuation values around the trend.
///
/// White noise: i.i.d. N(0, sigma2). AR(1): d_t = a d_{t-1} +
/// sqrt((1-a^2) sigma2) xi_t with d_0 drawn from the stationary
/// distribution N(0, sigma2), so every finite sample is second-order
/// stationary (no burn-in). Deterministic for a fixed seed.
SamplePath simulate(const ProcessSpec& spec, std::size_t n, std::uint64_t seed);

/// Integrates an increment path into a price path:
/// x_t = x0 + drift_slope * t + sum_{tau<=t} dy_tau, t = 1..n.
SamplePath cumulate(const SamplePath& path, double x0, double drift_slope);

}  // namespace tdmv

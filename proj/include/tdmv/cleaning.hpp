#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdmv/autocov.hpp"
#include "tdmv/process.hpp"

namespace tdmv {

/// Shrinkage target: currently only the diagonal matrix of the input's own
/// variances, D = diag(S_{t,t}).
enum class ShrinkTarget { DiagonalOfVariances };

/// Shrinkage configuration. `delta` absent means "determine the intensity
/// from the data" via auto_intensity; an explicit value must lie in [0,1].
struct ShrinkageConfig {
    std::optional<double> delta;  ///< nullopt = auto
    ShrinkTarget target = ShrinkTarget::DiagonalOfVariances;

    void validate() const;
    bool is_auto() const { return !delta.has_value(); }
};

/// Substitution rule S <- delta D + (1 - delta) S on an increment-level
/// sampled (or averaged) matrix. Diagonal entries are unchanged; provenance
/// becomes Cleaned. The config must carry an explicit delta.
AutoCovMatrix shrink(const AutoCovMatrix& sigmaY, const ShrinkageConfig& config);
AutoCovMatrix shrink(const AutoCovMatrix& sigmaY, double delta);

/// Data-driven shrinkage intensity.
///
/// Each window yields its own sample matrix (T lags, M = window length - T).
/// The intensity is the off-diagonal noise-to-signal ratio
///
///   delta* = clip( sum_{t != t'} var_w(S_w[t,t'])
///                / sum_{t != t'} mean_w(S_w[t,t'])^2 , 0, 1)
///
/// with var_w the unbiased across-window variance and mean_w the
/// across-window mean of each entry. A zero numerator yields 0; a zero
/// denominator with noise present yields 1. Deterministic given the
/// windows. This estimator is a module contract: it needs no distributional
/// assumptions and can be swapped behind this interface.
double auto_intensity(const std::vector<SamplePath>& windows, int T);

/// Log-eigenvalue histogram of a symmetric matrix ensemble.
struct SpectrumHistogram {
    std::vector<double> log_eigenvalues;  ///< sorted ln(lambda) of retained eigenvalues
    std::vector<double> bin_edges;        ///< strictly increasing, size bins+1
    std::vector<double> densities;        ///< integrate to retained / total
    std::size_t count_nonpositive = 0;    ///< eigenvalues at or below the floor

    std::size_t count_total() const { return log_eigenvalues.size() + count_nonpositive; }
};

/// Full symmetric eigendecomposition; eigenvalues below 1e-12 * lambda_max
/// are counted as nonpositive and excluded from the histogram. bins = 0
/// selects the Freedman-Diaconis rule.
SpectrumHistogram eigen_spectrum(const AutoCovMatrix& sigma, int bins = 0);

/// Pooled spectrum over `replicas` independent price-level sample matrices
/// built from i.i.d. N(0,1) increments (sample_autocov of T lags from
/// T + M draws, then p_transform). Per-replica seeds derive
/// deterministically from `seed`. This is the simulated comparison curve
/// for empirical spectra.
SpectrumHistogram null_model_spectrum(int T, int M, int replicas, std::uint64_t seed,
                                      int bins = 0, int threads = 0);

/// Builds the normalized histogram for an already-pooled log-eigenvalue
/// sample. bins = 0 selects the Freedman-Diaconis rule.
SpectrumHistogram make_log_histogram(std::vector<double> log_eigenvalues,
                                     std::size_t count_nonpositive, int bins = 0);

/// Two-sample Kolmogorov-Smirnov distance between sorted samples.
double ks_distance(const std::vector<double>& sorted_a, const std::vector<double>& sorted_b);

}  // namespace tdmv

#pragma once

#include "tdmv/autocov.hpp"
#include "tdmv/process.hpp"

namespace tdmv {

/// Rolling-window geometry: T risk-horizon lags estimated from M shifted
/// samples, windows advanced by `stride` increments.
struct WindowConfig {
    int T = 50;
    int M = 100;
    int stride = 150;

    void validate() const;
};

/// Sample auto-covariance over T lags from a fluctuation series.
///
/// With the series written 1-based as d_1, ..., d_n (n >= T + M):
///   S_{t,t'} = (M-1)^-1 sum_{mu=1..M} d_{t+mu} d_{t'+mu},  t, t' in 1..T,
/// so d_1 is never addressed and the last term uses d_{T+M}. No mean is
/// subtracted: inputs are expected to be detrended fluctuations already.
/// Symmetric by construction; layer copied from the input.
AutoCovMatrix sample_autocov(const SamplePath& fluctuations, int T, int M);

/// Maps an increment-level matrix to the price level via the double
/// cumulative sum S^X_{t,t'} = sum_{tau<=t} sum_{tau'<=t'} S^Y_{tau,tau'}
/// (O(T^2)). Linear, and preserves positive semi-definiteness. Provenance
/// and sample size carry over.
AutoCovMatrix p_transform(const AutoCovMatrix& incr);

struct DetrendResult {
    SamplePath residuals;
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares of x_t against t = 1..n. Residuals have zero
/// sample mean.
DetrendResult detrend_linear(const SamplePath& path);

struct NormalizeResult {
    SamplePath path;
    double scale = 1.0;  ///< the sample standard deviation divided out
};

/// Rescales increments to unit sample variance (M-1 denominator). Throws
/// DegenerateWindowError when the variance is numerically zero.
NormalizeResult normalize_window(const SamplePath& incr);

}  // namespace tdmv

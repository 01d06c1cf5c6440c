#pragma once

#include <optional>

#include <Eigen/Dense>

#include "tdmv/process.hpp"
#include "tdmv/types.hpp"

namespace tdmv {

/// Symmetric T x T auto-covariance matrix tagged with its layer and origin.
struct AutoCovMatrix {
    Eigen::MatrixXd entries;
    Layer layer = Layer::PriceLevel;
    Provenance provenance = Provenance::True;
    std::optional<int> sample_size;  ///< M, when estimated from M samples

    int dim() const { return static_cast<int>(entries.rows()); }

    /// T / M; only meaningful when sample_size is present.
    std::optional<double> alpha() const {
        if (!sample_size) return std::nullopt;
        return static_cast<double>(dim()) / static_cast<double>(*sample_size);
    }

    /// Throws unless the matrix is square and symmetric to 1e-12 (relative
    /// to the largest absolute entry).
    void validate() const;
};

/// Exact auto-covariance of the spec's fluctuations over T lags, at the
/// spec's own layer: sigma2 * I for white noise, sigma2 * a^|i-j| for
/// AR(1). Increment-level results are mapped to the price level with
/// p_transform (see estimation.hpp).
AutoCovMatrix true_autocov(const ProcessSpec& spec, int T);

/// Closed-form inverse of the price-level auto-covariance, with the
/// shorthand constants A = 1+a, B = 1+aA, C = 1+A^2 used by the
/// increment-level form.
struct ClosedFormInverse {
    double a = 0.0;
    double A = 1.0;
    double B = 1.0;
    double C = 2.0;
    Eigen::MatrixXd matrix;
};

/// Builds the closed-form inverse of the price-level auto-covariance
/// implied by the spec (T >= 3; the forms distinguish boundary and
/// interior rows).
///
/// Price-level fluctuations: tridiagonal with diagonal
/// (1, 1+a^2, ..., 1+a^2, 1) and off-diagonal -a, all over (1-a^2) sigma2;
/// a = 0 reduces it to the identity / sigma2.
///
/// Increment-level fluctuations: derived from D' J D where D is the
/// first-difference operator and J the tridiagonal form above. The band
/// structure breaks in the last two rows:
///   diagonal       (C, 2B, ..., 2B, C, 1)
///   1st off-diag   (-A^2, ..., -A^2, -A)
///   2nd off-diag   (a, ..., a)
/// all over (1-a^2) sigma2. a = 0 gives the pentadiagonal collapse to
/// tridiagonal (2, ..., 2, 1) with off-diagonal -1, i.e. the inverse of
/// the cumulation Gram matrix.
ClosedFormInverse true_inverse(const ProcessSpec& spec, int T);

/// Analytic price-level auto-covariance entry for increment-level AR(1)
/// fluctuations: sum_{tau<=t} sum_{tau'<=t'} sigma2 a^|tau-tau'| in closed
/// form. Used as an independent cross-check of the cumulative-sum
/// transform.
double cumulated_ar1_autocov_entry(double a, double sigma2, int t, int tprime);

}  // namespace tdmv

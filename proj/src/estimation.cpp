#include "tdmv/estimation.hpp"

#include <cmath>
#include <string>

namespace tdmv {

void WindowConfig::validate() const {
    if (T < 2) throw ValidationError("window config requires T >= 2");
    if (M < 2) throw ValidationError("window config requires M >= 2");
    if (stride < 1) throw ValidationError("window config requires stride >= 1");
}

AutoCovMatrix sample_autocov(const SamplePath& fluctuations, int T, int M) {
    if (T < 1) throw SizeError("sample_autocov requires T >= 1");
    if (M < 2) throw SizeError("sample_autocov requires M >= 2");
    const std::size_t need = static_cast<std::size_t>(T) + static_cast<std::size_t>(M);
    if (fluctuations.size() < need) {
        throw InsufficientDataError(
            "sample_autocov needs at least T + M = " + std::to_string(need) +
            " values, got " + std::to_string(fluctuations.size()));
    }

    // Rows of X are the M shifted length-T views; S = X'X / (M-1).
    Eigen::MatrixXd x(M, T);
    const double* d = fluctuations.values.data();
    for (int mu = 0; mu < M; ++mu) {
        for (int t = 0; t < T; ++t) x(mu, t) = d[t + mu + 1];
    }
    Eigen::MatrixXd s = (x.transpose() * x) / static_cast<double>(M - 1);
    s = ((s + s.transpose()) * 0.5).eval();  // exact symmetry
    return AutoCovMatrix{std::move(s), fluctuations.layer, Provenance::Sampled, M};
}

AutoCovMatrix p_transform(const AutoCovMatrix& incr) {
    if (incr.layer != Layer::IncrementLevel) {
        throw LayerMismatchError("p_transform expects an increment-level matrix");
    }
    const int T = incr.dim();
    Eigen::MatrixXd m = incr.entries;
    for (int i = 1; i < T; ++i) m.row(i) += m.row(i - 1);
    for (int j = 1; j < T; ++j) m.col(j) += m.col(j - 1);
    return AutoCovMatrix{std::move(m), Layer::PriceLevel, incr.provenance,
                         incr.sample_size};
}

DetrendResult detrend_linear(const SamplePath& path) {
    const std::size_t n = path.size();
    if (n < 2) throw SizeError("detrend_linear requires at least 2 points");

    // t = 1..n; use centered sums for stability.
    const double tbar = 0.5 * static_cast<double>(n + 1);
    double xbar = 0.0;
    for (double v : path.values) xbar += v;
    xbar /= static_cast<double>(n);

    double stx = 0.0, stt = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i + 1) - tbar;
        stx += dt * (path.values[i] - xbar);
        stt += dt * dt;
    }
    const double slope = stx / stt;
    const double intercept = xbar - slope * tbar;

    SamplePath res = path;
    res.spec.reset();
    for (std::size_t i = 0; i < n; ++i) {
        res.values[i] -= intercept + slope * static_cast<double>(i + 1);
    }
    return DetrendResult{std::move(res), slope, intercept};
}

NormalizeResult normalize_window(const SamplePath& incr) {
    if (incr.layer != Layer::IncrementLevel) {
        throw LayerMismatchError("normalize_window expects an increment-level path");
    }
    const std::size_t n = incr.size();
    if (n < 2) throw SizeError("normalize_window requires at least 2 points");

    double mean = 0.0;
    for (double v : incr.values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : incr.values) ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(n - 1);
    if (!(var > 0.0) || !std::isfinite(var)) {
        throw DegenerateWindowError("window has zero sample variance");
    }

    NormalizeResult out;
    out.scale = std::sqrt(var);
    out.path = incr;
    for (auto& v : out.path.values) v /= out.scale;
    return out;
}

}  // namespace tdmv

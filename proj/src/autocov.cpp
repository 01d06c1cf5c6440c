#include "tdmv/autocov.hpp"

#include <cmath>
#include <string>

namespace tdmv {

void AutoCovMatrix::validate() const {
    if (entries.rows() != entries.cols()) {
        throw ValidationError("auto-covariance matrix must be square");
    }
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    const double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        throw ValidationError("auto-covariance matrix is not symmetric (max deviation " +
                              std::to_string(asym) + ")");
    }
}

AutoCovMatrix true_autocov(const ProcessSpec& spec, int T) {
    spec.validate();
    if (T < 1) throw SizeError("true_autocov requires T >= 1");

    Eigen::MatrixXd m(T, T);
    if (spec.kind == ProcessKind::WhiteNoise) {
        m = spec.sigma2 * Eigen::MatrixXd::Identity(T, T);
    } else {
        for (int i = 0; i < T; ++i) {
            for (int j = 0; j < T; ++j) {
                m(i, j) = spec.sigma2 * std::pow(spec.a, std::abs(i - j));
            }
        }
    }
    return AutoCovMatrix{std::move(m), spec.layer, Provenance::True, std::nullopt};
}

ClosedFormInverse true_inverse(const ProcessSpec& spec, int T) {
    spec.validate();
    if (T < 3) throw SizeError("true_inverse requires T >= 3");

    const double a = spec.a;
    ClosedFormInverse inv;
    inv.a = a;
    inv.A = 1.0 + a;
    inv.B = 1.0 + a * inv.A;
    inv.C = 1.0 + inv.A * inv.A;

    const double scale = 1.0 / ((1.0 - a * a) * spec.sigma2);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(T, T);

    if (spec.layer == Layer::PriceLevel) {
        m(0, 0) = m(T - 1, T - 1) = 1.0;
        for (int i = 1; i < T - 1; ++i) m(i, i) = 1.0 + a * a;
        for (int i = 0; i + 1 < T; ++i) m(i, i + 1) = m(i + 1, i) = -a;
    } else {
        // Interior band from D'JD; the two trailing rows break the pattern.
        for (int i = 0; i < T - 1; ++i) m(i, i) = 2.0 * inv.B;
        m(0, 0) = inv.C;
        m(T - 2, T - 2) = inv.C;
        m(T - 1, T - 1) = 1.0;
        for (int i = 0; i + 1 < T; ++i) m(i, i + 1) = m(i + 1, i) = -inv.A * inv.A;
        m(T - 2, T - 1) = m(T - 1, T - 2) = -inv.A;
        for (int i = 0; i + 2 < T; ++i) m(i, i + 2) = m(i + 2, i) = a;
    }
    inv.matrix = scale * m;
    return inv;
}

double cumulated_ar1_autocov_entry(double a, double sigma2, int t, int tprime) {
    if (t > tprime) std::swap(t, tprime);
    if (a == 0.0) return sigma2 * t;
    const double one_minus_a = 1.0 - a;
    const double at = std::pow(a, t);
    const double adiff = std::pow(a, tprime - t);
    const double s = t + 2.0 * a * t / one_minus_a -
                     a * (1.0 - at) * (1.0 + adiff) / (one_minus_a * one_minus_a);
    return sigma2 * s;
}

}  // namespace tdmv

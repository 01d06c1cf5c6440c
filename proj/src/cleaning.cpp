#include "tdmv/cleaning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdmv/estimation.hpp"
#include "tdmv/rng.hpp"
#include "tdmv/threading.hpp"

namespace tdmv {

void ShrinkageConfig::validate() const {
    if (delta && !(*delta >= 0.0 && *delta <= 1.0)) {
        throw ValidationError("shrinkage intensity must lie in [0,1], got " +
                              std::to_string(*delta));
    }
}

AutoCovMatrix shrink(const AutoCovMatrix& sigmaY, const ShrinkageConfig& config) {
    config.validate();
    if (config.is_auto()) {
        throw ValidationError(
            "auto shrinkage intensity must be resolved via auto_intensity first");
    }
    return shrink(sigmaY, *config.delta);
}

AutoCovMatrix shrink(const AutoCovMatrix& sigmaY, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw ValidationError("shrinkage intensity must lie in [0,1], got " +
                              std::to_string(delta));
    }
    if (sigmaY.layer != Layer::IncrementLevel) {
        throw LayerMismatchError("shrink operates on increment-level matrices");
    }
    if (sigmaY.provenance != Provenance::Sampled &&
        sigmaY.provenance != Provenance::Averaged) {
        throw ValidationError("shrink expects a sampled or averaged matrix");
    }

    AutoCovMatrix out = sigmaY;
    out.provenance = Provenance::Cleaned;
    out.entries *= (1.0 - delta);
    // Restore the diagonal exactly: the target D shares it with the input.
    out.entries.diagonal() = sigmaY.entries.diagonal();
    return out;
}

double auto_intensity(const std::vector<SamplePath>& windows, int T) {
    if (windows.size() < 2) {
        throw InsufficientDataError("auto_intensity needs at least 2 windows");
    }
    const int W = static_cast<int>(windows.size());

    std::vector<Eigen::MatrixXd> mats;
    mats.reserve(W);
    for (const auto& w : windows) {
        const int M = static_cast<int>(w.size()) - T;
        mats.push_back(sample_autocov(w, T, M).entries);
    }

    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(T, T);
    for (const auto& m : mats) mean += m;
    mean /= static_cast<double>(W);

    Eigen::MatrixXd var = Eigen::MatrixXd::Zero(T, T);
    for (const auto& m : mats) var += (m - mean).cwiseAbs2();
    var /= static_cast<double>(W - 1);

    double noise = 0.0, signal = 0.0;
    for (int i = 0; i < T; ++i) {
        for (int j = 0; j < T; ++j) {
            if (i == j) continue;
            noise += var(i, j);
            signal += mean(i, j) * mean(i, j);
        }
    }
    if (noise == 0.0) return 0.0;
    if (signal == 0.0) return 1.0;
    return std::clamp(noise / signal, 0.0, 1.0);
}

namespace {

std::vector<double> retained_log_eigenvalues(const Eigen::VectorXd& eigvals,
                                             std::size_t* nonpositive) {
    const double lmax = eigvals.size() ? eigvals.maxCoeff() : 0.0;
    const double floor = 1e-12 * std::max(lmax, 0.0);
    std::vector<double> logs;
    logs.reserve(eigvals.size());
    for (Eigen::Index i = 0; i < eigvals.size(); ++i) {
        if (eigvals(i) > floor && eigvals(i) > 0.0) {
            logs.push_back(std::log(eigvals(i)));
        } else {
            ++*nonpositive;
        }
    }
    return logs;
}

}  // namespace

SpectrumHistogram make_log_histogram(std::vector<double> logs,
                                     std::size_t nonpositive, int bins) {
    std::sort(logs.begin(), logs.end());
    SpectrumHistogram h;
    h.count_nonpositive = nonpositive;
    h.log_eigenvalues = std::move(logs);

    const std::size_t n = h.log_eigenvalues.size();
    const std::size_t total = n + nonpositive;
    if (n == 0) {
        h.bin_edges = {0.0, 1.0};
        h.densities = {0.0};
        return h;
    }

    const double lo = h.log_eigenvalues.front();
    const double hi = h.log_eigenvalues.back();
    int nbins = bins;
    if (nbins <= 0) {
        // Freedman-Diaconis on the log eigenvalues.
        const double q1 = h.log_eigenvalues[n / 4];
        const double q3 = h.log_eigenvalues[(3 * n) / 4];
        const double iqr = q3 - q1;
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
        if (width > 0.0 && hi > lo) {
            nbins = static_cast<int>(std::ceil((hi - lo) / width));
            nbins = std::clamp(nbins, 1, 1000);
        } else {
            nbins = 1;
        }
    }

    double left = lo, right = hi;
    if (!(right > left)) {  // all mass at one point
        left -= 0.5;
        right += 0.5;
    }
    const double width = (right - left) / nbins;

    h.bin_edges.resize(nbins + 1);
    for (int b = 0; b <= nbins; ++b) h.bin_edges[b] = left + width * b;
    h.bin_edges.back() = right;

    std::vector<std::size_t> counts(nbins, 0);
    for (double v : h.log_eigenvalues) {
        int b = static_cast<int>((v - left) / width);
        b = std::clamp(b, 0, nbins - 1);
        ++counts[b];
    }
    h.densities.resize(nbins);
    for (int b = 0; b < nbins; ++b) {
        h.densities[b] =
            static_cast<double>(counts[b]) / (static_cast<double>(total) * width);
    }
    return h;
}

SpectrumHistogram eigen_spectrum(const AutoCovMatrix& sigma, int bins) {
    sigma.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma.entries);
    if (es.info() != Eigen::Success) {
        throw ValidationError("eigendecomposition failed");
    }
    std::size_t nonpositive = 0;
    auto logs = retained_log_eigenvalues(es.eigenvalues(), &nonpositive);
    return make_log_histogram(std::move(logs), nonpositive, bins);
}

SpectrumHistogram null_model_spectrum(int T, int M, int replicas, std::uint64_t seed,
                                      int bins, int threads) {
    if (replicas < 1) throw ValidationError("null_model_spectrum requires replicas >= 1");
    if (T < 1 || M < 2) throw SizeError("null_model_spectrum requires T >= 1, M >= 2");

    constexpr std::uint64_t kStream = 0x6e756c6c73706563ULL;  // "nullspec"
    std::vector<std::vector<double>> per_replica(replicas);
    std::vector<std::size_t> nonpos(replicas, 0);

    parallel_for(replicas, threads, [&](int r) {
        ProcessSpec spec;
        spec.kind = ProcessKind::WhiteNoise;
        spec.sigma2 = 1.0;
        spec.layer = Layer::IncrementLevel;
        const auto path = simulate(spec, static_cast<std::size_t>(T) + M,
                                   derive_seed(seed, kStream, r));
        const auto priceCov = p_transform(sample_autocov(path, T, M));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(priceCov.entries);
        per_replica[r] = retained_log_eigenvalues(es.eigenvalues(), &nonpos[r]);
    });

    std::vector<double> pooled;
    pooled.reserve(static_cast<std::size_t>(T) * replicas);
    std::size_t nonpositive = 0;
    for (int r = 0; r < replicas; ++r) {
        pooled.insert(pooled.end(), per_replica[r].begin(), per_replica[r].end());
        nonpositive += nonpos[r];
    }
    return histogram_from_logs(std::move(pooled), nonpositive, bins);
}

double ks_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) {
        throw InsufficientDataError("ks_distance requires nonempty samples");
    }
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        const double fa = static_cast<double>(i) / a.size();
        const double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

}  // namespace tdmv

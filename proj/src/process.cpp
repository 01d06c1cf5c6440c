#include "tdmv/process.hpp"

#include <cmath>

#include "tdmv/rng.hpp"

namespace tdmv {

void ProcessSpec::validate() const {
    if (!(std::abs(a) < 1.0)) {
        throw ValidationError("AR coefficient must satisfy |a| < 1, got a=" +
                              std::to_string(a));
    }
    if (!(sigma2 > 0.0)) {
        throw ValidationError("sigma2 must be positive, got sigma2=" +
                              std::to_string(sigma2));
    }
    if (kind == ProcessKind::WhiteNoise && a != 0.0) {
        throw ValidationError("white noise requires a = 0");
    }
}

SamplePath simulate(const ProcessSpec& spec, std::size_t n, std::uint64_t seed) {
    spec.validate();
    if (n < 1) throw SizeError("simulate requires n >= 1");

    Rng rng(seed);
    std::vector<double> values(n);
    const double scale = std::sqrt(spec.sigma2);
    if (spec.kind == ProcessKind::WhiteNoise) {
        for (auto& v : values) v = scale * rng.gaussian();
    } else {
        const double innov = std::sqrt((1.0 - spec.a * spec.a) * spec.sigma2);
        values[0] = scale * rng.gaussian();
        for (std::size_t t = 1; t < n; ++t) {
            values[t] = spec.a * values[t - 1] + innov * rng.gaussian();
        }
    }
    return SamplePath{std::move(values), spec.layer, spec, seed};
}

SamplePath cumulate(const SamplePath& path, double x0, double drift_slope) {
    if (path.layer != Layer::IncrementLevel) {
        throw LayerMismatchError("cumulate expects an increment-level path");
    }
    std::vector<double> prices(path.size());
    double acc = 0.0;
    for (std::size_t t = 0; t < path.size(); ++t) {
        acc += path.values[t];
        prices[t] = x0 + drift_slope * static_cast<double>(t + 1) + acc;
    }
    std::optional<ProcessSpec> spec = path.spec;
    if (spec) {
        spec->layer = Layer::PriceLevel;
        spec->drift_slope = drift_slope;
    }
    return SamplePath{std::move(prices), Layer::PriceLevel, spec, path.seed};
}

}  // namespace tdmv

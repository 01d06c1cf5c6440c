#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tdmv {

/// splitmix64 finalizer. Used for seed derivation only, never as the main
/// generator.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic seed splitting: maps (master, stream, index) to a child
/// seed. Parallel and serial runs that assign the same (stream, index)
/// pairs therefore consume identical random sequences.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index) {
    return mix64(master ^ mix64(stream ^ mix64(index)));
}

/// Reproducible random source.
///
/// Uniforms come from std::mt19937_64 (algorithm fixed by the standard) as
/// (x >> 11) * 2^-53 in [0,1). Gaussians use the Marsaglia polar method so
/// results do not depend on the C++ library's unspecified
/// std::normal_distribution. Same seed, same sequence, on any IEEE-754
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace tdmv

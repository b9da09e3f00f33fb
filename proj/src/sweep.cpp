#include "hetc/sweep.hpp"

#include "hetc/errors.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace hetc {

namespace {

SweepRow sweep_one(const ExperimentConfig& base, const std::string& key, double value) {
    SweepRow row;
    row.value = value;
    try {
        ExperimentConfig cfg = base;
        apply_setting(cfg, key, fmt::format("{}", value));
        const RunSummary s = run_summary(cfg);
        row.status = s.status;
        row.message = s.message;
        row.events_total = s.total_events();
        row.events_relative = s.events_relative;
        row.events_fixed = s.events_fixed;
        row.min_dwell = s.min_dwell;
        row.max_tracking_error = s.max_tracking_error;
    } catch (const ConfigInvalid& e) {
        row.config_rejected = true;
        row.message = e.what();
    }
    return row;
}

void check_key(const ExperimentConfig& base, const std::string& key) {
    (void)scalar_setting(base, key);
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const ExperimentConfig& base, const std::string& key,
                                       std::span<const double> values) {
    check_key(base, key);
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        rows.push_back(sweep_one(base, key, v));
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const std::string& key, std::span<const double> values,
                                int threads) {
    check_key(base, key);
    if (threads <= 0) threads = sweep_threads_from_env();
    if (threads <= 0) threads = omp_get_max_threads();

    std::vector<SweepRow> rows(values.size());
    const auto count = static_cast<std::ptrdiff_t>(values.size());
    #pragma omp parallel for schedule(dynamic, 1) num_threads(threads) default(none) shared(rows, base, key, values, count)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        rows[static_cast<std::size_t>(i)] = sweep_one(base, key, values[static_cast<std::size_t>(i)]);
    }
    return rows;
}

int sweep_threads_from_env() {
    const char* env = std::getenv("HETC_SIM_THREADS");
    if (env == nullptr) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0 || v > 4096) return 0;
    return static_cast<int>(v);
}

std::string format_sweep_table(const std::string& key, std::span<const SweepRow> rows) {
    std::string out = fmt::format("{}\tstatus\tevents_total\tevents_relative\tevents_fixed\tmin_dwell\tmax_tracking_error\n",
                                  key);
    for (const auto& r : rows) {
        const std::string_view status = r.config_rejected ? std::string_view("config_invalid") : to_string(r.status);
        out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", r.value, status, r.events_total, r.events_relative,
                           r.events_fixed, std::isfinite(r.min_dwell) ? fmt::format("{}", r.min_dwell) : "inf",
                           r.max_tracking_error);
    }
    return out;
}

}  // namespace hetc

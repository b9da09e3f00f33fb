#pragma once

#include "hetc/config.hpp"
#include "hetc/simulation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hetc {

struct SweepRow {
    double value = 0.0;
    RunStatus status = RunStatus::ok;
    std::string message;
    std::int64_t events_total = 0;
    std::int64_t events_relative = 0;
    std::int64_t events_fixed = 0;
    double min_dwell = 0.0;
    double max_tracking_error = 0.0;
    bool config_rejected = false;
};

/// One simulation per value of a numeric scalar key; rejected values are flagged, not fatal.
std::vector<SweepRow> run_sweep_serial(const ExperimentConfig& base, const std::string& key,
                                       std::span<const double> values);

/// OpenMP over rows, at most `threads` at once (0 = HETC_SIM_THREADS or the OpenMP default).
/// Rows come back in input order and equal run_sweep_serial exactly.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const std::string& key, std::span<const double> values,
                                int threads = 0);

/// Thread cap from HETC_SIM_THREADS; 0 when unset or invalid.
int sweep_threads_from_env();

/// Tab-separated table with a header line.
std::string format_sweep_table(const std::string& key, std::span<const SweepRow> rows);

}  // namespace hetc

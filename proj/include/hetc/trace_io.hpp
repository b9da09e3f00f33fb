#pragma once

#include "hetc/config.hpp"
#include "hetc/simulation.hpp"

#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace hetc {

inline constexpr int kTraceSchemaVersion = 1;

/// Column names in file order for an order-n plant.
std::vector<std::string> trace_columns(std::size_t n);

/**
 * First line `# hetc-trace schema_version=1`, then the header, then one row per
 * record. Values use the shortest representation that round-trips to the same double.
 */
void write_trace_csv(std::ostream& out, const SimulationTrace& trace, std::size_t n);
void write_trace_csv(const std::filesystem::path& path, const SimulationTrace& trace, std::size_t n);

/// Run summary with the fully resolved configuration echoed under "config".
nlohmann::json summary_json(const RunSummary& summary, const ExperimentConfig& cfg);

/// Line charts of tracking, control, inter-event times, observer errors and phi_hat; returns the files written.
std::vector<std::filesystem::path> write_plots(const std::filesystem::path& dir, const SimulationTrace& trace);

}  // namespace hetc

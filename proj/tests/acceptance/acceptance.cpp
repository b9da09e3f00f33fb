// Acceptance checks; prints one PASS/FAIL line per criterion.
#include "hetc/config.hpp"
#include "hetc/simulation.hpp"
#include "hetc/trace_io.hpp"
#include "hetc/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

// Regression bound for |w1 - w_r| after the 2 s transient.
constexpr double kTrackingBound = 0.15;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    fmt::print("[{}] {:>2} {:<28} {}\n", ok ? "PASS" : "FAIL", id, name, detail);
    if (!ok) ++failures;
}

void report(int id, const hetc::verify::SuiteResult& r) { report(id, r.name, r.passed, r.detail); }

std::string csv_bytes(const hetc::SimulationTrace& trace) {
    std::ostringstream out;
    hetc::write_trace_csv(out, trace, 2);
    return out.str();
}

}  // namespace

int main() {
    const auto cfg = hetc::example_preset();

    const auto start = std::chrono::steady_clock::now();
    const auto first = hetc::run_simulation(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& s = first.summary;

    report(1, "communication saving",
           s.ok() && s.total_events() < 2000 && s.events_relative > 0 && s.events_fixed > 0 && seconds < 30.0,
           fmt::format("status={} events={} (relative {}, fixed {}) of {} samples, runtime {:.2f} s",
                       hetc::to_string(s.status), s.total_events(), s.events_relative, s.events_fixed,
                       s.steps_planned, seconds));

    const double upper = *std::min_element(s.min_upper_margin.begin(), s.min_upper_margin.end());
    const double lower = *std::min_element(s.min_lower_margin.begin(), s.min_lower_margin.end());
    report(2, "constraint satisfaction", s.ok() && upper > 0.0 && lower > 0.0,
           fmt::format("min upper margin {:.4f}, min lower margin {:.4f} over {} steps", upper, lower,
                       s.steps_completed));

    report(3, "positive dwell time", s.ok() && s.min_dwell >= cfg.sim.step_s && s.min_dwell > 0.0,
           fmt::format("min inter-event time {} s (step {} s)", s.min_dwell, cfg.sim.step_s));

    report(4, "tracking after transient", s.ok() && s.max_tracking_error < kTrackingBound,
           fmt::format("max |w1 - w_r| for t >= {} s = {:.4f} (bound {})", cfg.transient_s, s.max_tracking_error,
                       kTrackingBound));

    const auto roundtrip = hetc::verify::transform_roundtrip();
    const auto derivative = hetc::verify::transform_derivative();
    report(5, "constraint transform", roundtrip.passed && derivative.passed,
           roundtrip.detail + "; " + derivative.detail);

    report(6, hetc::verify::tanh_bound());
    report(7, hetc::verify::differentiator_tracking());
    report(8, hetc::verify::observer_convergence());

    const auto dir = std::filesystem::temp_directory_path() / "hetc_acceptance";
    std::filesystem::create_directories(dir);
    const auto path_a = dir / "trace_a.csv";
    const auto path_b = dir / "trace_b.csv";
    hetc::write_trace_csv(path_a, first, 2);
    hetc::write_trace_csv(path_b, hetc::run_simulation(cfg), 2);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string a = slurp(path_a), b = slurp(path_b);
    report(9, "deterministic trace", !a.empty() && a == b && a == csv_bytes(first),
           fmt::format("{} bytes, files {}", a.size(), a == b ? "identical" : "differ"));
    std::filesystem::remove_all(dir);

    report(10, hetc::verify::trigger_truth_table());

    fmt::print("{} of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

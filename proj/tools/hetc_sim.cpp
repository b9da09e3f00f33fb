// Experiment runner: run | verify | sweep
#include "hetc/config.hpp"
#include "hetc/errors.hpp"
#include "hetc/simulation.hpp"
#include "hetc/sweep.hpp"
#include "hetc/trace_io.hpp"
#include "hetc/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfigInvalid = 2;
constexpr int kExitRunFailed = 3;

hetc::ExperimentConfig load(const std::string& config_path, const std::string& preset_name) {
    hetc::ExperimentConfig cfg = config_path.empty() ? hetc::preset(preset_name) : hetc::load_config(config_path);
    hetc::resolve_defaults(cfg);
    hetc::validate(cfg);
    return cfg;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        out.push_back(v);
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::string& preset_name, const fs::path& out_dir, bool plots) {
    hetc::ExperimentConfig cfg = load(config_path, preset_name);
    if (plots) cfg.output.plots = true;
    fs::create_directories(out_dir);

    const auto start = std::chrono::steady_clock::now();
    const hetc::SimulationTrace trace = hetc::run_simulation(cfg);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    hetc::write_trace_csv(out_dir / cfg.output.trace, trace, cfg.order());
    auto summary = hetc::summary_json(trace.summary, cfg);
    summary["wall_time_s"] = elapsed;
    std::ofstream(out_dir / cfg.output.summary) << summary.dump(2) << '\n';
    std::ofstream(out_dir / "resolved.cfg") << hetc::to_config_text(cfg);
    if (cfg.output.plots) {
        hetc::write_plots(out_dir, trace);
    }

    const auto& s = trace.summary;
    fmt::print("status={} steps={}/{} events={} (relative={}, fixed={}) min_dwell={} max_err={:.5f} time={:.2f}s\n",
               hetc::to_string(s.status), s.steps_completed, s.steps_planned, s.total_events(), s.events_relative,
               s.events_fixed, s.min_dwell, s.max_tracking_error, elapsed);
    for (const auto& w : hetc::gain_lint(cfg.controller.gains, cfg.controller.tau)) {
        fmt::print(stderr, "lint: {}\n", w);
    }
    if (!s.ok()) {
        fmt::print(stderr, "run failed: {}\n", s.message);
        return kExitRunFailed;
    }
    return 0;
}

int cmd_verify() {
    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (const auto& r : hetc::verify::run_all()) {
        fmt::print("[{}] {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
        all = all && r.passed;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("{} in {:.2f}s\n", all ? "all suites passed" : "FAILURES", elapsed);
    return all ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, const std::string& preset_name, const std::string& param,
              const std::string& values_text, const fs::path& out_dir) {
    const hetc::ExperimentConfig cfg = load(config_path, preset_name);
    const auto values = parse_values(values_text);
    const auto rows = hetc::run_sweep(cfg, param, values);
    const std::string table = hetc::format_sweep_table(param, rows);
    fs::create_directories(out_dir);
    std::ofstream(out_dir / "sweep.tsv") << table;
    fmt::print("{}", table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid event-triggered adaptive backstepping simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset_name = "paper_sec4";
    std::string out_dir = "out";
    bool plots = false;

    auto* run = app.add_subcommand("run", "simulate one experiment and write trace, summary and plots");
    run->add_option("--config", config_path, "experiment config file");
    run->add_option("--preset", preset_name, "built-in preset when no config is given")->capture_default_str();
    run->add_option("--out", out_dir, "output directory")->capture_default_str();
    run->add_flag("--plots", plots, "write SVG charts");

    app.add_subcommand("verify", "run the built-in property suites");

    std::string param;
    std::string values;
    auto* sweep = app.add_subcommand("sweep", "run one simulation per value of a scalar parameter");
    sweep->add_option("--config", config_path, "experiment config file");
    sweep->add_option("--preset", preset_name, "built-in preset when no config is given")->capture_default_str();
    sweep->add_option("--out", out_dir, "output directory")->capture_default_str();
    sweep->add_option("--param", param, "dotted config key, e.g. trigger.t")->required();
    sweep->add_option("--values", values, "comma separated values")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, preset_name, out_dir, plots);
        if (sweep->parsed()) return cmd_sweep(config_path, preset_name, param, values, out_dir);
        return cmd_verify();
    } catch (const hetc::ConfigInvalid& e) {
        fmt::print(stderr, "config invalid: {}\n", e.what());
        return kExitConfigInvalid;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}

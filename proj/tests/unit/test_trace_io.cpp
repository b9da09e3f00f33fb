#include <catch2/catch_amalgamated.hpp>

#include "hetc/config.hpp"
#include "hetc/simulation.hpp"
#include "hetc/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("trace columns", "[trace]") {
    const auto cols = hetc::trace_columns(2);
    const std::vector<std::string> want{"t",     "w1",    "w2",     "zeta",    "varpi1", "varpi2", "z1",
                                        "z2",    "v",     "u",      "trigger", "dhat1",  "dhat2",  "dtrue1",
                                        "dtrue2", "phi_hat", "aleph", "w_norm1", "w_norm2"};
    CHECK(cols == want);
}

TEST_CASE("csv layout and exact round trip of values", "[trace]") {
    auto cfg = hetc::example_preset();
    cfg.sim.duration_s = 0.05;
    const auto trace = hetc::run_simulation(cfg);
    std::ostringstream out;
    hetc::write_trace_csv(out, trace, 2);
    const auto lines = lines_of(out.str());

    REQUIRE(lines.size() == trace.records.size() + 2);
    CHECK(lines[0] == "# hetc-trace schema_version=1");
    CHECK(split(lines[1]) == hetc::trace_columns(2));
    for (std::size_t k = 2; k < lines.size(); ++k) {
        REQUIRE(split(lines[k]).size() == 19);
    }

    const auto& r = trace.records[7];
    const auto cells = split(lines[9]);
    auto parse = [](const std::string& s) {
        double v = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), v);
        return v;
    };
    CHECK(parse(cells[0]) == r.t);
    CHECK(parse(cells[1]) == r.w[0]);
    CHECK(parse(cells[8]) == r.v);
    CHECK(parse(cells[11]) == r.d_hat[0]);
    CHECK(parse(cells[14]) == r.d_true[1]);
    CHECK(cells[10] == "0");
    CHECK(split(lines[2])[10] == "2");
}

TEST_CASE("summary json", "[trace]") {
    auto cfg = hetc::toy_preset();
    const auto trace = hetc::run_simulation(cfg);
    const auto j = hetc::summary_json(trace.summary, cfg);
    CHECK(j.at("status") == "ok");
    CHECK(j.at("events").at("fixed") == 1);
    // a single event leaves the dwell undefined
    CHECK(j.at("min_dwell_s").is_null());
    CHECK(j.at("config").at("trigger.psi") == "1");
    CHECK(j.contains("gain_lint"));
}

TEST_CASE("plots are written as svg", "[trace]") {
    auto cfg = hetc::example_preset();
    cfg.sim.duration_s = 0.2;
    const auto trace = hetc::run_simulation(cfg);
    const auto dir = std::filesystem::temp_directory_path() / "hetc_plot_test";
    std::filesystem::remove_all(dir);
    const auto files = hetc::write_plots(dir, trace);
    CHECK(files.size() == 5);
    for (const auto& f : files) {
        REQUIRE(std::filesystem::file_size(f) > 100);
    }
    std::filesystem::remove_all(dir);
}

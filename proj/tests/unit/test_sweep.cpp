#include <catch2/catch_amalgamated.hpp>

#include "hetc/config.hpp"
#include "hetc/errors.hpp"
#include "hetc/sweep.hpp"

#include <cstdlib>
#include <vector>

namespace {

hetc::ExperimentConfig base() {
    auto c = hetc::example_preset();
    c.sim.duration_s = 0.3;
    return c;
}

}  // namespace

TEST_CASE("parallel sweep equals the serial one", "[sweep]") {
    const std::vector<double> values{0.5, 1.0, 2.0, 4.0};
    const auto serial = hetc::run_sweep_serial(base(), "trigger.t", values);
    const auto parallel = hetc::run_sweep(base(), "trigger.t", values, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].value == values[i]);
        CHECK(parallel[i].value == values[i]);
        CHECK(serial[i].events_relative == parallel[i].events_relative);
        CHECK(serial[i].events_fixed == parallel[i].events_fixed);
        CHECK(serial[i].max_tracking_error == parallel[i].max_tracking_error);
        CHECK(serial[i].min_dwell == parallel[i].min_dwell);
    }
}

TEST_CASE("single value sweep matches a plain run", "[sweep]") {
    const std::vector<double> values{0.3};
    const auto rows = hetc::run_sweep(base(), "trigger.upsilon", values, 1);
    const auto s = hetc::run_summary(base());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].events_total == s.total_events());
    CHECK(rows[0].max_tracking_error == s.max_tracking_error);
}

TEST_CASE("rejected values are flagged per row", "[sweep]") {
    const std::vector<double> values{0.3, 1.5};
    const auto rows = hetc::run_sweep(base(), "trigger.upsilon", values, 2);
    CHECK_FALSE(rows[0].config_rejected);
    CHECK(rows[1].config_rejected);
    const auto table = hetc::format_sweep_table("trigger.upsilon", rows);
    CHECK(table.find("config_invalid") != std::string::npos);
    CHECK(table.rfind("trigger.upsilon\tstatus", 0) == 0);
}

TEST_CASE("unknown sweep keys fail up front", "[sweep]") {
    const std::vector<double> values{1.0};
    CHECK_THROWS_AS(hetc::run_sweep(base(), "gains.xi", values), hetc::ConfigInvalid);
    CHECK_THROWS_AS(hetc::run_sweep_serial(base(), "nope", values), hetc::ConfigInvalid);
}

TEST_CASE("thread cap from the environment", "[sweep]") {
    ::setenv("HETC_SIM_THREADS", "3", 1);
    CHECK(hetc::sweep_threads_from_env() == 3);
    ::setenv("HETC_SIM_THREADS", "lots", 1);
    CHECK(hetc::sweep_threads_from_env() == 0);
    ::unsetenv("HETC_SIM_THREADS");
    CHECK(hetc::sweep_threads_from_env() == 0);
}

#include <catch2/catch_amalgamated.hpp>

#include "hetc/config.hpp"
#include "hetc/errors.hpp"
#include "hetc/simulation.hpp"

#include <cmath>

using Catch::Approx;

namespace {

hetc::ExperimentConfig short_sec4(double duration) {
    auto c = hetc::example_preset();
    c.sim.duration_s = duration;
    return c;
}

}  // namespace

TEST_CASE("toy plant at rest stays at rest", "[simulation]") {
    const auto trace = hetc::run_simulation(hetc::toy_preset());
    REQUIRE(trace.summary.ok());
    REQUIRE(trace.records.size() == 1001);
    for (const auto& r : trace.records) {
        REQUIRE(std::abs(r.z[0]) < 1e-9);
        REQUIRE(r.v == 0.0);
    }
    // only the initial latch fires
    CHECK(trace.summary.total_events() == 1);
}

TEST_CASE("controller step with zero weights and zero estimate", "[simulation]") {
    auto cfg = hetc::toy_preset();
    cfg.init.phi_hat = 0.0;
    cfg.init.w = {0.5, 0.0};
    hetc::ClosedLoop loop(hetc::make_plant(cfg.plant), cfg);
    auto y = loop.initial_state();

    const double varpi1 = std::log((2.0 + 0.5) / (2.0 - 0.5));
    const double omega1 = 4.0 / (2.5 * 1.5);
    hetc::ControllerSignals sig;

    // D_hat = mu_hat + m varpi; choose mu_hat so that D_hat_1 = 0
    y[3] = -5.0 * varpi1;
    loop.controller_step(0.0, y, sig);
    CHECK(sig.z[0] == Approx(varpi1).epsilon(1e-14));
    CHECK(sig.d_hat[0] == Approx(0.0).margin(1e-15));
    CHECK(sig.alpha[0] == Approx(-5.0 * varpi1).epsilon(1e-13));

    // with mu_hat = 0 the estimate enters through -Omega D_hat
    y[3] = 0.0;
    loop.controller_step(0.0, y, sig);
    CHECK(sig.alpha[0] == Approx(-5.0 * varpi1 - omega1 * 5.0 * varpi1).epsilon(1e-13));
}

TEST_CASE("zero errors give zero control", "[simulation]") {
    auto cfg = hetc::toy_preset();
    hetc::ClosedLoop loop(hetc::make_plant(cfg.plant), cfg);
    hetc::ControllerSignals sig;
    loop.controller_step(0.3, loop.initial_state(), sig);
    CHECK(sig.v == 0.0);
}

TEST_CASE("state layout", "[simulation]") {
    const auto cfg = hetc::example_preset();
    hetc::ClosedLoop loop(hetc::make_plant(cfg.plant), cfg);
    CHECK(loop.weight_basis(0).node_count() == 25);
    CHECK(loop.weight_basis(1).node_count() == 25);
    CHECK(loop.c_basis(0).node_count() == 625);
    // w(2) zeta mu(2) W(25+25) phi diff(2) aleph
    CHECK(loop.state_size() == 2 + 1 + 2 + 50 + 1 + 2 + 1);
    const auto y = loop.initial_state();
    CHECK(loop.phi_hat(y) == 0.5);
    CHECK(loop.differentiator(y, 2)[0] == 0.1);
    CHECK(loop.differentiator(y, 2)[1] == 0.1);
    CHECK(loop.aleph(y) == 0.0);
}

TEST_CASE("repeated runs are identical", "[simulation][property]") {
    const auto cfg = short_sec4(0.5);
    const auto a = hetc::run_simulation(cfg);
    const auto b = hetc::run_simulation(cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        REQUIRE(a.records[k].w == b.records[k].w);
        REQUIRE(a.records[k].u == b.records[k].u);
        REQUIRE(a.records[k].d_hat == b.records[k].d_hat);
    }
}

TEST_CASE("held input only changes at events", "[simulation][property]") {
    const auto trace = hetc::run_simulation(short_sec4(3.0));
    REQUIRE(trace.summary.ok());
    CHECK(trace.records.front().trigger == hetc::TriggerDecision::fixed);
    CHECK(trace.records.front().u == trace.records.front().v);
    std::int64_t rel = 0, fix = 0;
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        const auto& r = trace.records[k];
        const auto& prev = trace.records[k - 1];
        if (r.trigger == hetc::TriggerDecision::none) {
            REQUIRE(r.u == prev.u);
        } else {
            REQUIRE(r.u == r.v);
        }
        rel += r.trigger == hetc::TriggerDecision::relative;
        fix += r.trigger == hetc::TriggerDecision::fixed;
    }
    CHECK(rel == trace.summary.events_relative);
    CHECK(fix + 1 == trace.summary.events_fixed);
}

TEST_CASE("logged estimates satisfy the observer identity", "[simulation][property]") {
    const auto cfg = short_sec4(1.0);
    const auto trace = hetc::run_simulation(cfg);
    for (const auto& r : trace.records) {
        for (std::size_t i = 0; i < 2; ++i) {
            REQUIRE(r.d_hat[i] == r.mu_hat[i] + cfg.controller.gains[i].m_gain * r.varpi[i]);
        }
    }
}

TEST_CASE("constraint violation stops the run with a partial trace", "[simulation]") {
    auto cfg = hetc::toy_preset();
    cfg.plant.disturbances = {5000.0, 0.0};
    const auto trace = hetc::run_simulation(cfg);
    CHECK(trace.summary.status == hetc::RunStatus::constraint_violation);
    CHECK_FALSE(trace.summary.message.empty());
    CHECK(trace.records.size() < 1001);
    CHECK(trace.summary.steps_completed + 1 == trace.records.size());
}

TEST_CASE("invalid configs are rejected before running", "[simulation]") {
    auto cfg = hetc::toy_preset();
    cfg.controller.trigger.upsilon = 1.5;
    cfg.controller.shape.upsilon = 1.5;
    CHECK_THROWS_AS(hetc::run_simulation(cfg), hetc::ConfigInvalid);
}

TEST_CASE("euler and rk4 agree at small steps", "[simulation]") {
    auto cfg = short_sec4(0.2);
    cfg.sim.step_s = 1e-4;
    const auto rk = hetc::run_summary(cfg);
    cfg.sim.integrator = hetc::Integrator::euler;
    const auto eu = hetc::run_summary(cfg);
    REQUIRE(rk.ok());
    REQUIRE(eu.ok());
    CHECK(eu.max_abs_z1 == Approx(rk.max_abs_z1).epsilon(0.05));
}

TEST_CASE("halving the step barely moves the final tracking error", "[simulation][slow]") {
    auto cfg = hetc::example_preset();
    const auto coarse = hetc::run_simulation(cfg);
    cfg.sim.step_s /= 2.0;
    const auto fine = hetc::run_simulation(cfg);
    REQUIRE(coarse.summary.ok());
    REQUIRE(fine.summary.ok());
    const double z_coarse = coarse.records.back().z[0];
    const double z_fine = fine.records.back().z[0];
    CHECK(std::abs(z_fine - z_coarse) < 0.05 * std::abs(z_coarse));
}

TEST_CASE("dwell is reported on the step grid", "[simulation]") {
    const auto s = hetc::run_summary(short_sec4(2.0));
    REQUIRE(s.ok());
    const double steps = s.min_dwell / 1e-3;
    CHECK(steps == std::round(steps));
    CHECK(s.min_dwell >= 1e-3);
}

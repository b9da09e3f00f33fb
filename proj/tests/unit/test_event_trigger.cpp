#include <catch2/catch_amalgamated.hpp>

#include "hetc/errors.hpp"
#include "hetc/event_trigger.hpp"

#include <cmath>

using hetc::TriggerDecision;

namespace {

const hetc::HetcPolicy kPolicy{.upsilon = 0.3, .phi = 1.0, .psi = 1.0, .switch_t = 1.0};

}  // namespace

TEST_CASE("measurement error", "[trigger]") {
    CHECK(hetc::measurement_error(1.5, 1.5) == 0.0);
    CHECK(hetc::measurement_error(2.0, -1.0) == 3.0);
    CHECK(hetc::measurement_error(0.0, 0.0) == 0.0);
}

TEST_CASE("trigger boundaries are inclusive", "[trigger]") {
    const double thr = kPolicy.upsilon * kPolicy.switch_t + kPolicy.phi;
    CHECK(hetc::should_trigger(thr, kPolicy.switch_t, kPolicy) == TriggerDecision::relative);
    CHECK(hetc::should_trigger(-thr, -kPolicy.switch_t, kPolicy) == TriggerDecision::relative);
    CHECK(hetc::should_trigger(std::nextafter(thr, 0.0), kPolicy.switch_t, kPolicy) == TriggerDecision::none);
    CHECK(hetc::should_trigger(0.999, 0.0, kPolicy) == TriggerDecision::none);
    CHECK(hetc::should_trigger(1.0, 0.0, kPolicy) == TriggerDecision::fixed);
}

TEST_CASE("branch is chosen by |u| against the switching boundary", "[trigger]") {
    const hetc::HetcPolicy p{.upsilon = 0.5, .phi = 2.0, .psi = 0.1, .switch_t = 3.0};
    const double just_below = std::nextafter(3.0, 0.0);
    CHECK(hetc::should_trigger(0.2, just_below, p) == TriggerDecision::fixed);
    CHECK(hetc::should_trigger(0.2, 3.0, p) == TriggerDecision::none);
    CHECK(hetc::should_trigger(3.5, 3.0, p) == TriggerDecision::relative);
    CHECK(hetc::should_trigger(3.5, -3.0, p) == TriggerDecision::relative);
    CHECK(hetc::should_trigger(-0.1, -just_below, p) == TriggerDecision::fixed);
}

TEST_CASE("applying events latches v and counts branches", "[trigger]") {
    hetc::TriggerState ts;
    ts = hetc::apply_event(ts, 1.0, 0.0, TriggerDecision::fixed);
    CHECK(ts.held_u == 1.0);
    CHECK(ts.event_count_fixed == 1);
    CHECK(ts.event_count_relative == 0);
    CHECK(std::isinf(ts.min_dwell));
    // hold reset: the error is zero right after an event
    CHECK(hetc::measurement_error(1.0, ts.held_u) == 0.0);

    ts = hetc::apply_event(ts, 2.0, 0.001, TriggerDecision::relative);
    ts = hetc::apply_event(ts, 3.0, 0.004, TriggerDecision::relative);
    CHECK(ts.event_count_relative == 2);
    CHECK(ts.min_dwell == Catch::Approx(0.001).epsilon(1e-12));
    CHECK(ts.total_events() == 3);

    const auto same = hetc::apply_event(ts, 9.0, 0.005, TriggerDecision::none);
    CHECK(same.held_u == 3.0);
    CHECK(same.total_events() == 3);

    CHECK_THROWS_AS(hetc::apply_event(ts, 1.0, 0.002, TriggerDecision::fixed), hetc::NonMonotonicTime);
}

TEST_CASE("dwell of two events", "[trigger]") {
    hetc::TriggerState ts;
    ts = hetc::apply_event(ts, 1.0, 0.001, TriggerDecision::fixed);
    ts = hetc::apply_event(ts, 1.0, 0.004, TriggerDecision::fixed);
    CHECK(ts.min_dwell == Catch::Approx(0.003).epsilon(1e-12));
}

TEST_CASE("policy validation", "[trigger]") {
    CHECK_NOTHROW(kPolicy.validate());
    CHECK_THROWS_AS((hetc::HetcPolicy{1.0, 1.0, 1.0, 1.0}.validate()), hetc::ConfigInvalid);
    CHECK_THROWS_AS((hetc::HetcPolicy{0.3, 1.0, 0.0, 1.0}.validate()), hetc::ConfigInvalid);
    CHECK_THROWS_AS((hetc::HetcPolicy{0.3, 1.0, 1.0, -1.0}.validate()), hetc::ConfigInvalid);
}

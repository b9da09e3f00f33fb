#include "hetc/event_trigger.hpp"

#include "hetc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hetc {

void HetcPolicy::validate() const {
    if (!(upsilon > 0.0 && upsilon < 1.0)) {
        throw ConfigInvalid("trigger.upsilon", "must lie in (0, 1)");
    }
    if (!(phi > 0.0)) {
        throw ConfigInvalid("trigger.phi", "must be positive");
    }
    if (!(psi > 0.0)) {
        throw ConfigInvalid("trigger.psi", "must be positive");
    }
    if (!(switch_t > 0.0)) {
        throw ConfigInvalid("trigger.t", "must be positive");
    }
}

TriggerDecision should_trigger(double k, double u, const HetcPolicy& p) noexcept {
    const double abs_u = std::abs(u);
    const double abs_k = std::abs(k);
    if (abs_u >= p.switch_t) {
        return abs_k >= p.upsilon * abs_u + p.phi ? TriggerDecision::relative : TriggerDecision::none;
    }
    return abs_k >= p.psi ? TriggerDecision::fixed : TriggerDecision::none;
}

TriggerState apply_event(const TriggerState& ts, double v, double now, TriggerDecision decision) {
    if (now < ts.last_event_time) {
        throw NonMonotonicTime("event time moved backwards");
    }
    TriggerState next = ts;
    if (decision == TriggerDecision::none) {
        return next;
    }
    if (std::isfinite(ts.last_event_time)) {
        next.min_dwell = std::min(ts.min_dwell, now - ts.last_event_time);
    }
    next.held_u = v;
    next.last_event_time = now;
    if (decision == TriggerDecision::relative) {
        ++next.event_count_relative;
    } else {
        ++next.event_count_fixed;
    }
    return next;
}

}  // namespace hetc

#pragma once

#include <cstdint>
#include <limits>

namespace hetc {

/// Hybrid threshold policy: relative threshold when |u| >= switch_t, fixed otherwise.
struct HetcPolicy {
    double upsilon = 0.3;
    double phi = 1.0;
    double psi = 1.0;
    double switch_t = 1.0;

    void validate() const;
};

enum class TriggerDecision : std::uint8_t { none = 0, relative = 1, fixed = 2 };

struct TriggerState {
    double held_u = 0.0;
    double last_event_time = -std::numeric_limits<double>::infinity();
    std::int64_t event_count_relative = 0;
    std::int64_t event_count_fixed = 0;
    /// Smallest spacing between consecutive events; +inf until two events occurred.
    double min_dwell = std::numeric_limits<double>::infinity();

    std::int64_t total_events() const noexcept { return event_count_relative + event_count_fixed; }
};

inline double measurement_error(double v, double u) noexcept { return v - u; }

/// Both thresholds are inclusive.
TriggerDecision should_trigger(double k, double u, const HetcPolicy& p) noexcept;

/// Latches v into the hold. Throws NonMonotonicTime if `now` precedes the last event.
TriggerState apply_event(const TriggerState& ts, double v, double now, TriggerDecision decision);

}  // namespace hetc

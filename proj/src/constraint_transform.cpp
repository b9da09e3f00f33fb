#include "hetc/constraint_transform.hpp"

#include "hetc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hetc {

void ConstraintBounds::validate() const {
    if (!(delta_lower > 0.0) || !std::isfinite(delta_lower)) {
        throw ConfigInvalid("delta_lower", "must be positive and finite");
    }
    if (!(delta_upper > 0.0) || !std::isfinite(delta_upper)) {
        throw ConfigInvalid("delta_upper", "must be positive and finite");
    }
}

bool inside_bounds(double w, const ConstraintBounds& b, double guard) noexcept {
    if (guard < 0.0) {
        guard = b.default_guard();
    }
    return w > -b.delta_lower + guard && w < b.delta_upper - guard;
}

namespace {

void require_inside(double w, const ConstraintBounds& b, double guard) {
    if (!inside_bounds(w, b, guard)) {
        throw OutOfBounds("state " + std::to_string(w) + " outside (" + std::to_string(-b.delta_lower) + ", " +
                          std::to_string(b.delta_upper) + ")");
    }
}

}  // namespace

double to_constrained_coords(double w, const ConstraintBounds& b, double guard) {
    require_inside(w, b, guard);
    // log1p forms keep precision when w is small relative to the limits
    return std::log1p(w / b.delta_lower) - std::log1p(-w / b.delta_upper) + std::log(b.delta_lower / b.delta_upper);
}

double from_constrained_coords(double p, const ConstraintBounds& b) noexcept {
    const double width = b.delta_lower + b.delta_upper;
    // for large |p| the exact value is closer to a limit than one ulp; keep it strictly inside
    if (p >= 0.0) {
        return std::min(b.delta_upper - width / (1.0 + std::exp(p)), std::nextafter(b.delta_upper, 0.0));
    }
    return std::max(width / (1.0 + std::exp(-p)) - b.delta_lower, std::nextafter(-b.delta_lower, 0.0));
}

double transform_gain(double w, const ConstraintBounds& b, double guard) {
    require_inside(w, b, guard);
    return (b.delta_lower + b.delta_upper) / ((b.delta_lower + w) * (b.delta_upper - w));
}

}  // namespace hetc

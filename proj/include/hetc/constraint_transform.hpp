#pragma once

namespace hetc {

/**
 * @brief Asymmetric box limits for one state: -delta_lower < w < delta_upper.
 */
struct ConstraintBounds {
    double delta_lower = 1.0;
    double delta_upper = 1.0;

    /// Throws ConfigInvalid unless both limits are positive and finite.
    void validate() const;

    /// Default guard distance, 1e-9 of the interval width.
    double default_guard() const noexcept { return 1e-9 * (delta_lower + delta_upper); }
};

/**
 * @brief Log-ratio barrier transform varpi = log((D1 + w) / (D2 - w)).
 *
 * Maps the open interval (-D1, D2) onto the real line. Throws OutOfBounds when
 * w is outside the interval or closer than `guard` to either limit; a negative
 * guard selects ConstraintBounds::default_guard().
 */
double to_constrained_coords(double w, const ConstraintBounds& b, double guard = -1.0);

/// Exact inverse of to_constrained_coords; total and overflow-free on finite input.
double from_constrained_coords(double p, const ConstraintBounds& b) noexcept;

/**
 * @brief Transform gain Omega = d(varpi)/dw = (D1 + D2) / ((D1 + w)(D2 - w)).
 *
 * Always positive inside the interval. Same error behaviour as to_constrained_coords.
 */
double transform_gain(double w, const ConstraintBounds& b, double guard = -1.0);

/// True when w lies strictly inside the interval, at least `guard` away from both limits.
bool inside_bounds(double w, const ConstraintBounds& b, double guard = -1.0) noexcept;

}  // namespace hetc

#pragma once

namespace hetc {

/**
 * @brief First-order sliding-mode differentiator state.
 *
 * delta0 tracks the input signal, sigma = d(delta0)/dt estimates its derivative.
 */
struct DifferentiatorState {
    double delta0 = 0.1;
    double delta1 = 0.1;
    double eps0 = 2.0;
    double eps1 = 2.0;
};

struct DifferentiatorRates {
    double d_delta0 = 0.0;
    double d_delta1 = 0.0;
    double sigma = 0.0;
};

/// sign with sign(0) = 0.
constexpr double signum(double x) noexcept { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/**
 * sigma    = delta1 - eps0 sqrt|delta0 - input| sign(delta0 - input)
 * delta0'  = sigma
 * delta1'  = -eps1 sign(delta1 - sigma)
 */
DifferentiatorRates differentiator_rates(const DifferentiatorState& s, double input) noexcept;

}  // namespace hetc

#pragma once

namespace hetc {

// Intermediate variable mu_hat = D_hat - m * varpi, one per backstepping step.
struct ObserverState {
    double mu_hat = 0.0;
    double m_gain = 1.0;
};

inline double disturbance_estimate(const ObserverState& s, double varpi) noexcept {
    return s.mu_hat + s.m_gain * varpi;
}

/**
 * dmu_hat/dt = -m (W^T P + coupling + Omega * D_hat).
 *
 * `coupling` is varpi_{i+1} for steps i < n and Omega_n * u for the last step,
 * so that mu - mu_hat obeys the observer error dynamics of the converted system.
 */
inline double observer_update_rate(const ObserverState& s, double nn_estimate, double coupling, double omega,
                                   double d_hat) noexcept {
    return -s.m_gain * (nn_estimate + coupling + omega * d_hat);
}

}  // namespace hetc

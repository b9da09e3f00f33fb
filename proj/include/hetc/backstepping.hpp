#pragma once

#include "hetc/constraint_transform.hpp"

#include <span>
#include <string>
#include <vector>

namespace hetc {

/// Design constants for one backstepping step; all strictly positive.
struct StepGains {
    double xi = 1.0;      ///< error feedback gain
    double a = 1.0;       ///< scaling of the phi_hat damping term
    double lambda = 1.0;  ///< weight adaptation rate
    double e = 1.0;       ///< weight leakage
    double m_gain = 1.0;  ///< disturbance observer gain

    void validate(const std::string& prefix) const;
};

/// Shape of the smooth control protocol v(t).
struct ControlShape {
    double upsilon = 0.3;
    double big_i = 3.0;
    double h = 900.0;

    /// Also enforces I > phi / (1 - upsilon) for the trigger offset `phi`.
    void validate(double phi) const;
};

/// Auxiliary signal dominating the unmodeled dynamic: aleph' = -decay*aleph + |w1|^exponent + offset.
struct DynamicSignal {
    double aleph = 0.0;
    double decay = 1.0;     // wp_bar
    double offset = 0.2;    // d_bar
    double exponent = 2.0;  // aleph_bar(s) = s^exponent
};

struct ReferenceSample {
    double y_r = 0.0;
    double y_r_dot = 0.0;
};

/// Reference in transformed coordinates: y_r = varpi(w_r), y_r' = Omega(w_r) * w_r'.
ReferenceSample reference_transform(double w_r, double w_r_dot, const ConstraintBounds& b1);

double dynamic_signal_rate(const DynamicSignal& s, double w1) noexcept;

/// alpha_1 = -xi z1 - z1/(2a^2) phi |P|^2 - Omega D_hat + y_r'.
double virtual_control_1(double z1, double phi_hat, double p_norm_sq, double omega1, double d_hat1, double y_r_dot,
                         const StepGains& g) noexcept;
double virtual_control_1(double z1, double phi_hat, std::span<const double> p1, double omega1, double d_hat1,
                         double y_r_dot, const StepGains& g) noexcept;

/// Intermediate steps: sigma_i (differentiator output) replaces y_r'.
double virtual_control_mid(double z_i, double phi_hat, double p_norm_sq, double omega_i, double d_hat_i,
                           double sigma_i, const StepGains& g) noexcept;
double virtual_control_mid(double z_i, double phi_hat, std::span<const double> p_i, double omega_i, double d_hat_i,
                           double sigma_i, const StepGains& g) noexcept;

/// Last step: the intermediate-step bracket divided by Omega_n. Throws DegenerateGain if Omega_n < 1e-12.
double virtual_control_n(double z_n, double phi_hat, double p_norm_sq, double omega_n, double d_hat_n,
                         double sigma_n, const StepGains& g);
double virtual_control_n(double z_n, double phi_hat, std::span<const double> p_n, double omega_n, double d_hat_n,
                         double sigma_n, const StepGains& g);

/// v = -(1 + upsilon)(alpha_n tanh(z_n alpha_n / H) + I tanh(z_n I / H)).
double continuous_control(double z_n, double alpha_n, const ControlShape& cs) noexcept;

/// Non-fatal findings from checking the gains against the stability conditions.
std::vector<std::string> gain_lint(std::span<const StepGains> gains, double tau);

}  // namespace hetc

#include "hetc/backstepping.hpp"

#include "hetc/errors.hpp"
#include "hetc/rbf.hpp"

#include <cmath>

namespace hetc {

namespace {

void require_positive(double v, const std::string& field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigInvalid(field, "must be positive and finite");
    }
}

}  // namespace

void StepGains::validate(const std::string& prefix) const {
    require_positive(xi, prefix + "xi");
    require_positive(a, prefix + "a");
    require_positive(lambda, prefix + "lambda");
    require_positive(e, prefix + "e");
    require_positive(m_gain, prefix + "m");
}

void ControlShape::validate(double phi) const {
    if (!(upsilon > 0.0 && upsilon < 1.0)) {
        throw ConfigInvalid("trigger.upsilon", "must lie in (0, 1)");
    }
    require_positive(h, "control.h");
    require_positive(big_i, "control.i");
    if (!(big_i > phi / (1.0 - upsilon))) {
        throw ConfigInvalid("control.i", "must exceed phi / (1 - upsilon)");
    }
}

ReferenceSample reference_transform(double w_r, double w_r_dot, const ConstraintBounds& b1) {
    return {to_constrained_coords(w_r, b1), transform_gain(w_r, b1) * w_r_dot};
}

double dynamic_signal_rate(const DynamicSignal& s, double w1) noexcept {
    return -s.decay * s.aleph + std::pow(std::abs(w1), s.exponent) + s.offset;
}

double virtual_control_mid(double z_i, double phi_hat, double p_norm_sq, double omega_i, double d_hat_i,
                           double sigma_i, const StepGains& g) noexcept {
    return -g.xi * z_i - z_i / (2.0 * g.a * g.a) * phi_hat * p_norm_sq - omega_i * d_hat_i + sigma_i;
}

double virtual_control_mid(double z_i, double phi_hat, std::span<const double> p_i, double omega_i, double d_hat_i,
                           double sigma_i, const StepGains& g) noexcept {
    return virtual_control_mid(z_i, phi_hat, squared_norm(p_i), omega_i, d_hat_i, sigma_i, g);
}

double virtual_control_1(double z1, double phi_hat, double p_norm_sq, double omega1, double d_hat1, double y_r_dot,
                         const StepGains& g) noexcept {
    return virtual_control_mid(z1, phi_hat, p_norm_sq, omega1, d_hat1, y_r_dot, g);
}

double virtual_control_1(double z1, double phi_hat, std::span<const double> p1, double omega1, double d_hat1,
                         double y_r_dot, const StepGains& g) noexcept {
    return virtual_control_mid(z1, phi_hat, squared_norm(p1), omega1, d_hat1, y_r_dot, g);
}

double virtual_control_n(double z_n, double phi_hat, double p_norm_sq, double omega_n, double d_hat_n,
                         double sigma_n, const StepGains& g) {
    if (!(omega_n >= 1e-12)) {
        throw DegenerateGain("transform gain of the last state vanished");
    }
    return virtual_control_mid(z_n, phi_hat, p_norm_sq, omega_n, d_hat_n, sigma_n, g) / omega_n;
}

double virtual_control_n(double z_n, double phi_hat, std::span<const double> p_n, double omega_n, double d_hat_n,
                         double sigma_n, const StepGains& g) {
    return virtual_control_n(z_n, phi_hat, squared_norm(p_n), omega_n, d_hat_n, sigma_n, g);
}

double continuous_control(double z_n, double alpha_n, const ControlShape& cs) noexcept {
    return -(1.0 + cs.upsilon) *
           (alpha_n * std::tanh(z_n * alpha_n / cs.h) + cs.big_i * std::tanh(z_n * cs.big_i / cs.h));
}

std::vector<std::string> gain_lint(std::span<const StepGains> gains, double tau) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        if (gains[i].xi < 2.5) {
            out.push_back("gains.xi[" + std::to_string(i + 1) + "] = " + std::to_string(gains[i].xi) +
                          " is below 5/2; the boundedness argument needs xi_i >= 5/2 + beta/2");
        }
    }
    if (!(tau > 0.0)) {
        out.push_back("adapt.tau should be positive for phi_hat to stay bounded");
    }
    // m_i^2 <= -(3/4 + beta/2)/Omega^2 has no real solution for beta >= 0
    out.push_back("observer gain condition m_i^2 <= -3/(4 Omega^2) - beta/(2 Omega^2) cannot hold for real m_i; "
                  "not checked");
    return out;
}

}  // namespace hetc

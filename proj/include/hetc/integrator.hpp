#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hetc {

enum class Integrator { rk4, euler };

Integrator parse_integrator(std::string_view name);
std::string_view to_string(Integrator m) noexcept;

/**
 * Fixed-step explicit integration of y' = f(t, y) over one step h.
 * `f` has signature void(double t, std::span<const double> y, std::span<double> dy).
 * Scratch buffers live in the stepper so repeated steps do not allocate.
 */
class FixedStepper {
public:
    FixedStepper(Integrator method, std::size_t size)
        : method_(method), k1_(size), k2_(size), k3_(size), k4_(size), tmp_(size) {}

    template <typename Rhs>
    void step(Rhs&& f, double t, double h, std::span<double> y) {
        const std::size_t n = y.size();
        if (method_ == Integrator::euler) {
            f(t, std::span<const double>(y), std::span<double>(k1_));
            for (std::size_t i = 0; i < n; ++i) {
                y[i] += h * k1_[i];
            }
            return;
        }
        const double half = 0.5 * h;
        f(t, std::span<const double>(y), std::span<double>(k1_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k1_[i];
        f(t + half, std::span<const double>(tmp_), std::span<double>(k2_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k2_[i];
        f(t + half, std::span<const double>(tmp_), std::span<double>(k3_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * k3_[i];
        f(t + h, std::span<const double>(tmp_), std::span<double>(k4_));
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += h / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
        }
    }

    Integrator method() const noexcept { return method_; }

private:
    Integrator method_;
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace hetc

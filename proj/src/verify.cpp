#include "hetc/verify.hpp"

#include "hetc/disturbance_observer.hpp"
#include "hetc/event_trigger.hpp"
#include "hetc/integrator.hpp"
#include "hetc/sliding_differentiator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace hetc::verify {

namespace {

const std::array<ConstraintBounds, 4> kBoundSets{{{2.1, 2.1}, {2.0, 2.4}, {0.5, 3.0}, {10.0, 0.1}}};

}  // namespace

SuiteResult transform_roundtrip(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::size_t checked = 0;
    for (const auto& b : kBoundSets) {
        const double lo = -b.delta_lower, hi = b.delta_upper, width = hi - lo;
        std::uniform_real_distribution<double> dist(lo + 1e-6 * width, hi - 1e-6 * width);
        for (std::size_t k = 0; k < samples; ++k) {
            // half on a uniform grid, half random
            const double w = (k % 2 == 0) ? lo + width * (static_cast<double>(k) + 0.5) / static_cast<double>(samples)
                                          : dist(rng);
            const double back = from_constrained_coords(to_constrained_coords(w, b), b);
            worst = std::max(worst, std::abs(back - w) / std::max(1.0, std::abs(w)));
            ++checked;
        }
    }
    return {"transform roundtrip", worst < 1e-12,
            fmt::format("{} points, worst scaled error {:.3e} (limit 1e-12)", checked, worst)};
}

SuiteResult transform_derivative(const GainFunction& gain, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (const auto& b : kBoundSets) {
        const double lo = -b.delta_lower, hi = b.delta_upper, width = hi - lo;
        const double h = 1e-6 * width;
        std::uniform_real_distribution<double> dist(lo + 0.01 * width, hi - 0.01 * width);
        for (std::size_t k = 0; k < samples; ++k) {
            const double w = dist(rng);
            const double fd = (to_constrained_coords(w + h, b) - to_constrained_coords(w - h, b)) / (2.0 * h);
            const double g = gain(w, b);
            worst = std::max(worst, std::abs(g - fd) / std::abs(fd));
        }
    }
    return {"transform gain vs finite difference", worst < 1e-5,
            fmt::format("worst relative error {:.3e} (limit 1e-5)", worst)};
}

SuiteResult transform_derivative(std::size_t samples, std::uint64_t seed) {
    return transform_derivative([](double w, const ConstraintBounds& b) { return transform_gain(w, b); }, samples, seed);
}

SuiteResult tanh_bound(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_mag(-6.0, 6.0);
    std::bernoulli_distribution neg(0.5);
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double b = std::pow(10.0, log_mag(rng));
        // a spans several decades around b so both the linear and saturated regimes are hit
        double a = b * std::pow(10.0, log_mag(rng) / 3.0);
        if (neg(rng)) a = -a;
        const double gap = std::abs(a) - a * std::tanh(a / b);
        if (gap < 0.0 || gap > 0.2785 * b) ++violations;
        worst_ratio = std::max(worst_ratio, gap / b);
    }
    return {"tanh inequality", violations == 0,
            fmt::format("{} samples, {} violations, max gap/b = {:.5f} (bound 0.2785)", samples, violations, worst_ratio)};
}

SuiteResult differentiator_tracking() {
    DifferentiatorState s{0.1, 0.1, 2.0, 2.9};
    FixedStepper stepper(Integrator::rk4, 2);
    std::array<double, 2> y{s.delta0, s.delta1};
    auto rhs = [&](double t, std::span<const double> yy, std::span<double> dy) {
        const auto r = differentiator_rates({yy[0], yy[1], s.eps0, s.eps1}, std::sin(t));
        dy[0] = r.d_delta0;
        dy[1] = r.d_delta1;
    };
    const double h = 1e-3;
    double worst = 0.0;
    for (int k = 0; k <= 10000; ++k) {
        const double t = k * h;
        if (t >= 1.0) {
            const double sigma = differentiator_rates({y[0], y[1], s.eps0, s.eps1}, std::sin(t)).sigma;
            worst = std::max(worst, std::abs(sigma - std::cos(t)));
        }
        stepper.step(rhs, t, h, y);
    }
    return {"sliding differentiator tracking", worst < 0.05,
            fmt::format("max |sigma - cos t| after 1 s = {:.4e} (limit 0.05)", worst)};
}

SuiteResult observer_convergence() {
    const double m = 2.0, dist = 2.0;
    const ObserverState base{0.0, m};
    FixedStepper stepper(Integrator::rk4, 2);
    std::array<double, 2> y{0.0, 0.0};  // varpi, mu_hat
    auto rhs = [&](double, std::span<const double> yy, std::span<double> dy) {
        const double drift = -yy[0];
        const double d_hat = disturbance_estimate({yy[1], m}, yy[0]);
        dy[0] = drift + dist;
        dy[1] = observer_update_rate({yy[1], base.m_gain}, drift, 0.0, 1.0, d_hat);
    };
    const double h = 1e-3;
    const double settle = 10.0 / m;
    double worst_vs_analytic = 0.0;
    double err_at_settle = 0.0;
    for (int k = 0; k <= 5000; ++k) {
        const double t = k * h;
        const double err = dist - disturbance_estimate({y[1], m}, y[0]);
        worst_vs_analytic = std::max(worst_vs_analytic, std::abs(err - dist * std::exp(-m * t)));
        if (k == static_cast<int>(std::lround(settle / h))) err_at_settle = std::abs(err);
        stepper.step(rhs, t, h, y);
    }
    const bool ok = worst_vs_analytic < 1e-3 && err_at_settle < 1e-3;
    return {"disturbance observer convergence", ok,
            fmt::format("|D - D_hat| at 10/m s = {:.3e}; max deviation from exp(-m t) solution = {:.3e}", err_at_settle,
                        worst_vs_analytic)};
}

SuiteResult trigger_truth_table() {
    const HetcPolicy p{0.3, 1.0, 1.0, 1.0};
    struct Case {
        double k, u;
        TriggerDecision expect;
    };
    const double thr_at_t = p.upsilon * 1.0 + p.phi;
    const double below_t = std::nextafter(p.switch_t, 0.0);
    const Case cases[] = {
        {thr_at_t, 1.0, TriggerDecision::relative},
        {-thr_at_t, -1.0, TriggerDecision::relative},
        {std::nextafter(thr_at_t, 0.0), 1.0, TriggerDecision::none},
        {p.psi, below_t, TriggerDecision::fixed},
        {std::nextafter(p.psi, 0.0), below_t, TriggerDecision::none},
        {p.psi, 0.0, TriggerDecision::fixed},
        {-p.psi, 0.0, TriggerDecision::fixed},
        {0.999, 0.0, TriggerDecision::none},
        {0.0, 0.0, TriggerDecision::none},
        {p.upsilon * 5.0 + p.phi, -5.0, TriggerDecision::relative},
        {std::nextafter(p.upsilon * 5.0 + p.phi, 0.0), 5.0, TriggerDecision::none},
        // relative threshold exceeds psi here, so the branch matters
        {1.2, 1.0, TriggerDecision::none},
        {1.2, below_t, TriggerDecision::fixed},
    };
    int failures = 0;
    for (const auto& c : cases) {
        if (should_trigger(c.k, c.u, p) != c.expect) ++failures;
    }
    return {"hybrid trigger truth table", failures == 0,
            fmt::format("{} cases, {} mismatches", std::size(cases), failures)};
}

std::vector<SuiteResult> run_all() {
    return {transform_roundtrip(), transform_derivative(), tanh_bound(), differentiator_tracking(),
            observer_convergence(), trigger_truth_table()};
}

}  // namespace hetc::verify

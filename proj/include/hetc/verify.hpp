#pragma once

#include "hetc/constraint_transform.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

/// Property suites run by `hetc_sim verify`.
namespace hetc::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

using GainFunction = std::function<double(double w, const ConstraintBounds& b)>;

/// |from(to(w)) - w| < 1e-12 max(1, |w|) over a grid plus random interior points.
SuiteResult transform_roundtrip(std::size_t samples = 10000, std::uint64_t seed = 1);

/// Gain vs central difference of the transform (h = 1e-6 * width), relative tol 1e-5.
/// `gain` is injectable so a corrupted formula can be shown to fail.
SuiteResult transform_derivative(const GainFunction& gain, std::size_t samples = 10000, std::uint64_t seed = 2);
SuiteResult transform_derivative(std::size_t samples = 10000, std::uint64_t seed = 2);

/// 0 <= |a| - a tanh(a/b) <= 0.2785 b for random a and b > 0.
SuiteResult tanh_bound(std::size_t samples = 100000, std::uint64_t seed = 3);

/// Input sin(t), eps0 = 2, eps1 = 2.9, RK4 step 1e-3: |sigma - cos t| < 0.05 after 1 s.
SuiteResult differentiator_tracking();

/// Scalar plant varpi' = -varpi + D with the network frozen at the true drift: error follows exp(-m t).
SuiteResult observer_convergence();

/// Boundary table for the hybrid trigger condition.
SuiteResult trigger_truth_table();

std::vector<SuiteResult> run_all();

}  // namespace hetc::verify

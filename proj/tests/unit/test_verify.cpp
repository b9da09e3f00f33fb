#include <catch2/catch_amalgamated.hpp>

#include "hetc/constraint_transform.hpp"
#include "hetc/verify.hpp"

#include <cmath>

TEST_CASE("every property suite passes", "[verify]") {
    for (const auto& r : hetc::verify::run_all()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("derivative suite catches a wrong gain", "[verify]") {
    // exponential form of the gain, which is not the derivative of the log-ratio map
    const auto exp_form = [](double w, const hetc::ConstraintBounds& b) {
        const double s = b.delta_lower + b.delta_upper;
        return s * std::exp(w) / ((b.delta_lower + std::exp(w)) * (b.delta_upper - std::exp(w)));
    };
    CHECK_FALSE(hetc::verify::transform_derivative(exp_form, 200).passed);

    const auto doubled = [](double w, const hetc::ConstraintBounds& b) { return 2.0 * hetc::transform_gain(w, b); };
    CHECK_FALSE(hetc::verify::transform_derivative(doubled, 200).passed);

    CHECK(hetc::verify::transform_derivative(
              [](double w, const hetc::ConstraintBounds& b) { return hetc::transform_gain(w, b); }, 200)
              .passed);
}

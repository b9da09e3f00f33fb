#pragma once

#include "hetc/constraint_transform.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hetc {

struct PlantState {
    std::vector<double> w;
    double zeta = 0.0;
};

struct ReferenceSignal {
    double w_r = 0.0;
    double w_r_dot = 0.0;
};

/**
 * @brief Strict-feedback plant with an unmodeled dynamic zeta.
 *
 * w_i' = f_i(w_1..w_{i+1}) + d_i(zeta, w, t), w_n' = f_n(w, u) + d_n(zeta, w, t),
 * zeta' = p(zeta, w, t). Implementations are immutable after construction and
 * may be shared between concurrent simulations.
 */
class PlantModel {
public:
    virtual ~PlantModel() = default;

    virtual std::string_view name() const noexcept = 0;
    std::size_t order() const noexcept { return bounds().size(); }
    virtual std::span<const ConstraintBounds> bounds() const noexcept = 0;

    /// f_i terms without disturbance; `drift` has order() entries.
    virtual void drift(std::span<const double> w, double u, std::span<double> drift) const = 0;
    /// True disturbances d_i(zeta, w, t).
    virtual void disturbance(std::span<const double> w, double zeta, double t, std::span<double> d) const = 0;
    virtual double unmodeled_rate(std::span<const double> w, double zeta, double t) const = 0;
    virtual ReferenceSignal reference(double t) const = 0;
};

struct PlantRates {
    std::vector<double> dw;
    double dzeta = 0.0;
};

/// dw_i/dt = f_i + d_i, dzeta/dt = p. Throws OutOfBounds if the state left its constraint box.
PlantRates plant_rates(const PlantModel& m, const PlantState& s, double u, double t);

/// Reference trajectory w_r = (3 sin 4t + cos t)/10 and its derivative.
ReferenceSignal example_reference(double t) noexcept;

/**
 * Two-state example plant:
 *   zeta' = -zeta + w1^2 cos t + 1/5
 *   w1'   = w1 + w2/2 + w2^3/3 + d1,            d1 = 13 zeta sin(w1) + 1
 *   w2'   = w1 w2 + sin(sin(w1) w2 / 2) u / 5 + (u^3 + 1/10)/7 + 2 d2,
 *                                               d2 = 3/5 cos(zeta t + w2 - 1) zeta - 1/10
 * The input enters non-affinely; the controller still assumes unit affine gain.
 */
class ExamplePlant final : public PlantModel {
public:
    explicit ExamplePlant(std::vector<ConstraintBounds> bounds);

    std::string_view name() const noexcept override { return "paper_sec4"; }
    std::span<const ConstraintBounds> bounds() const noexcept override { return bounds_; }
    void drift(std::span<const double> w, double u, std::span<double> drift) const override;
    void disturbance(std::span<const double> w, double zeta, double t, std::span<double> d) const override;
    double unmodeled_rate(std::span<const double> w, double zeta, double t) const override;
    ReferenceSignal reference(double t) const override { return example_reference(t); }

    /// The disturbance d_2 enters the w2 equation with gain 2.
    static constexpr double kD2Gain = 2.0;

private:
    std::vector<ConstraintBounds> bounds_;
};

/// Integrator chain w1' = w2 + d1, w2' = u + d2 with constant disturbances and constant reference.
class ToyLinearPlant final : public PlantModel {
public:
    ToyLinearPlant(std::vector<ConstraintBounds> bounds, std::vector<double> disturbances, double reference);

    std::string_view name() const noexcept override { return "toy_linear_scalar"; }
    std::span<const ConstraintBounds> bounds() const noexcept override { return bounds_; }
    void drift(std::span<const double> w, double u, std::span<double> drift) const override;
    void disturbance(std::span<const double> w, double zeta, double t, std::span<double> d) const override;
    double unmodeled_rate(std::span<const double> w, double zeta, double t) const override;
    ReferenceSignal reference(double) const override { return {reference_, 0.0}; }

private:
    std::vector<ConstraintBounds> bounds_;
    std::vector<double> disturbances_;
    double reference_;
};

struct PlantSettings {
    std::string name = "paper_sec4";
    std::vector<ConstraintBounds> bounds;
    std::vector<double> disturbances;  // toy plant only
    double reference = 0.0;            // toy plant only
};

/// Registered names: "paper_sec4", "toy_linear_scalar". Throws ConfigInvalid otherwise.
std::shared_ptr<const PlantModel> make_plant(const PlantSettings& settings);

std::vector<std::string> registered_plants();

}  // namespace hetc

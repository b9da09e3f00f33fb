#include "hetc/plant.hpp"

#include "hetc/errors.hpp"

#include <cmath>

namespace hetc {

PlantRates plant_rates(const PlantModel& m, const PlantState& s, double u, double t) {
    const auto bounds = m.bounds();
    if (s.w.size() != bounds.size()) {
        throw DimensionMismatch("plant state has wrong order");
    }
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (!inside_bounds(s.w[i], bounds[i])) {
            throw OutOfBounds("state w" + std::to_string(i + 1) + " left its constraint interval");
        }
    }
    PlantRates r;
    r.dw.resize(bounds.size());
    std::vector<double> d(bounds.size());
    m.drift(s.w, u, r.dw);
    m.disturbance(s.w, s.zeta, t, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
        r.dw[i] += d[i];
    }
    r.dzeta = m.unmodeled_rate(s.w, s.zeta, t);
    return r;
}

ReferenceSignal example_reference(double t) noexcept {
    return {(3.0 * std::sin(4.0 * t) + std::cos(t)) / 10.0, (12.0 * std::cos(4.0 * t) - std::sin(t)) / 10.0};
}

ExamplePlant::ExamplePlant(std::vector<ConstraintBounds> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.size() != 2) {
        throw ConfigInvalid("bounds", "paper_sec4 plant has exactly 2 states");
    }
    for (const auto& b : bounds_) {
        b.validate();
    }
}

void ExamplePlant::drift(std::span<const double> w, double u, std::span<double> drift) const {
    const double x1 = w[0];
    const double x2 = w[1];
    drift[0] = x1 + x2 / 2.0 + x2 * x2 * x2 / 3.0;
    drift[1] = x1 * x2 + std::sin(0.5 * std::sin(x1) * x2) * u / 5.0 + (u * u * u + 0.1) / 7.0;
}

void ExamplePlant::disturbance(std::span<const double> w, double zeta, double t, std::span<double> d) const {
    d[0] = 13.0 * (zeta * std::sin(w[0])) + 1.0;
    d[1] = kD2Gain * (0.6 * std::cos(zeta * t + w[1] - 1.0) * zeta - 0.1);
}

double ExamplePlant::unmodeled_rate(std::span<const double> w, double zeta, double t) const {
    return -zeta + w[0] * w[0] * std::cos(t) + 0.2;
}

ToyLinearPlant::ToyLinearPlant(std::vector<ConstraintBounds> bounds, std::vector<double> disturbances,
                               double reference)
    : bounds_(std::move(bounds)), disturbances_(std::move(disturbances)), reference_(reference) {
    if (bounds_.size() != 2) {
        throw ConfigInvalid("bounds", "toy_linear_scalar plant has exactly 2 states");
    }
    for (const auto& b : bounds_) {
        b.validate();
    }
    if (disturbances_.empty()) {
        disturbances_.assign(2, 0.0);
    }
    if (disturbances_.size() != 2) {
        throw ConfigInvalid("plant.disturbance", "needs one value per state");
    }
    if (!inside_bounds(reference_, bounds_[0])) {
        throw ConfigInvalid("plant.reference", "reference outside the first state's constraint interval");
    }
}

void ToyLinearPlant::drift(std::span<const double> w, double u, std::span<double> drift) const {
    drift[0] = w[1];
    drift[1] = u;
}

void ToyLinearPlant::disturbance(std::span<const double>, double, double, std::span<double> d) const {
    d[0] = disturbances_[0];
    d[1] = disturbances_[1];
}

double ToyLinearPlant::unmodeled_rate(std::span<const double>, double zeta, double) const { return -zeta; }

std::shared_ptr<const PlantModel> make_plant(const PlantSettings& settings) {
    if (settings.name == "paper_sec4") {
        return std::make_shared<ExamplePlant>(settings.bounds);
    }
    if (settings.name == "toy_linear_scalar") {
        return std::make_shared<ToyLinearPlant>(settings.bounds, settings.disturbances, settings.reference);
    }
    throw ConfigInvalid("plant", "unknown plant '" + settings.name + "'");
}

std::vector<std::string> registered_plants() { return {"paper_sec4", "toy_linear_scalar"}; }

}  // namespace hetc

#pragma once

#include "hetc/backstepping.hpp"
#include "hetc/event_trigger.hpp"
#include "hetc/integrator.hpp"
#include "hetc/plant.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hetc {

/// Grid layout shared by every RBF network of the controller.
struct RbfLayout {
    std::size_t nodes_per_dim = 5;
    double width = 1.0;
    std::pair<double, double> varpi_range{-3.0, 3.0};
    std::pair<double, double> z_range{-2.0, 2.0};
    std::pair<double, double> aleph_range{0.0, 2.0};
};

/// Gains for the differentiators of steps 2..n (index 0 is step 2).
struct DifferentiatorSettings {
    std::vector<double> eps0;
    std::vector<double> eps1;  // empty entries default to eps0
    double delta0_init = 0.1;
    double delta1_init = 0.1;
};

struct ControllerConfig {
    std::vector<StepGains> gains;
    ControlShape shape;
    HetcPolicy trigger;
    double tau = 1.5;
    double a0 = 1.0;
    DifferentiatorSettings diff;
    RbfLayout rbf;
    DynamicSignal aleph;
};

struct InitialConditions {
    std::vector<double> w;
    double zeta = 0.0;
    std::vector<double> mu_hat;  // empty -> zeros
    double phi_hat = 0.5;
};

struct SimConfig {
    double step_s = 1e-3;
    double duration_s = 20.0;
    Integrator integrator = Integrator::rk4;

    std::size_t step_count() const noexcept;
    void validate() const;
};

struct OutputSettings {
    std::string trace = "trace.csv";
    std::string summary = "summary.json";
    bool plots = false;
};

struct ExperimentConfig {
    PlantSettings plant;
    ControllerConfig controller;
    InitialConditions init;
    SimConfig sim;
    /// Tracking error statistics ignore t < transient_s.
    double transient_s = 2.0;
    OutputSettings output;

    std::size_t order() const noexcept { return plant.bounds.size(); }
};

/// The two-state example experiment with its reference design constants.
ExperimentConfig example_preset();

/// Disturbance-free integrator chain at rest; zero reference.
ExperimentConfig toy_preset();

/// Looks up a preset by name ("paper_sec4", "toy_linear_scalar"). Throws ConfigInvalid.
ExperimentConfig preset(std::string_view name);

/// Sets one dotted key from its textual value. Throws ConfigInvalid naming the key.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Reads one numeric scalar key (for sweeps). Throws ConfigInvalid for unknown or list keys.
double scalar_setting(const ExperimentConfig& cfg, std::string_view key);

/**
 * Parses the flat key/value grammar:
 *
 *     # comment
 *     preset = paper_sec4        (optional, must come first; default paper_sec4)
 *     trigger.upsilon = 0.3
 *     gains.xi = 150, 185        (lists are comma separated)
 *
 * Unset keys keep the preset's value. The result is resolved but not validated.
 */
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Fills defaulted fields (eps1 from eps0, zero observer states).
void resolve_defaults(ExperimentConfig& cfg);

/// Runs every lint; throws ConfigInvalid on the first failure.
void validate(const ExperimentConfig& cfg);

/// Every key with its fully resolved value, in grammar order.
std::vector<std::pair<std::string, std::string>> resolved_settings(const ExperimentConfig& cfg);

/// resolved_settings rendered in the config grammar; parse_config(to_config_text(c)) reproduces c.
std::string to_config_text(const ExperimentConfig& cfg);

}  // namespace hetc

#pragma once

#include "hetc/config.hpp"
#include "hetc/event_trigger.hpp"
#include "hetc/plant.hpp"
#include "hetc/rbf.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hetc {

/// One row of the trace, taken at a step boundary after the trigger decision.
struct StepRecord {
    double t = 0.0;
    std::vector<double> w;
    double zeta = 0.0;
    std::vector<double> varpi;
    std::vector<double> z;
    std::vector<double> alpha;
    double v = 0.0;
    double u = 0.0;
    TriggerDecision trigger = TriggerDecision::none;
    std::vector<double> d_hat;
    std::vector<double> d_true;
    std::vector<double> mu_hat;
    double phi_hat = 0.0;
    double aleph = 0.0;
    std::vector<double> w_norm;
    double w_r = 0.0;
};

enum class RunStatus : std::uint8_t { ok, constraint_violation, numerical_divergence };

std::string_view to_string(RunStatus s) noexcept;

struct RunSummary {
    RunStatus status = RunStatus::ok;
    std::string message;
    std::size_t steps_planned = 0;
    std::size_t steps_completed = 0;
    std::int64_t events_relative = 0;
    std::int64_t events_fixed = 0;
    /// +inf when fewer than two events occurred.
    double min_dwell = 0.0;
    double max_abs_z1 = 0.0;
    /// max |w1 - w_r| over t >= transient.
    double max_tracking_error = 0.0;
    /// Per state: min over the run of (delta_upper - w) and (w + delta_lower).
    std::vector<double> min_upper_margin;
    std::vector<double> min_lower_margin;

    std::int64_t total_events() const noexcept { return events_relative + events_fixed; }
    bool ok() const noexcept { return status == RunStatus::ok; }
};

struct SimulationTrace {
    std::vector<StepRecord> records;
    RunSummary summary;
};

/**
 * @brief Controller signals computed from the integrated state in dependency order.
 *
 * Indices are zero-based: entry i belongs to backstepping step i+1. sigma[0] is
 * unused (step 1 takes the analytic reference derivative instead).
 */
struct ControllerSignals {
    ReferenceSignal reference;
    double y_r = 0.0;
    double y_r_dot = 0.0;
    std::vector<double> varpi;
    std::vector<double> omega;
    std::vector<double> z;
    std::vector<double> d_hat;
    std::vector<double> sigma;
    std::vector<double> alpha;
    std::vector<double> c_norm_sq;  ///< |P_i(C_i)|^2
    double v = 0.0;
};

/**
 * @brief The closed loop as one ODE: plant, observers, weights, phi_hat,
 * differentiators and the dynamic signal, driven by a held input u.
 *
 * Flat state layout: w[n], zeta, mu_hat[n], W_1..W_n, phi_hat, (delta0, delta1) for
 * steps 2..n, aleph. The object owns scratch buffers, so one instance serves one
 * simulation at a time.
 */
class ClosedLoop {
public:
    ClosedLoop(std::shared_ptr<const PlantModel> plant, const ExperimentConfig& cfg);

    std::size_t order() const noexcept { return n_; }
    std::size_t state_size() const noexcept { return size_; }
    const PlantModel& plant() const noexcept { return *plant_; }
    const RbfBasis& weight_basis(std::size_t step) const { return f_basis_.at(step); }
    const RbfBasis& c_basis(std::size_t step) const { return c_basis_.at(step); }

    std::vector<double> initial_state() const;

    /// Computes every controller signal; throws OutOfBounds if a state is at its constraint.
    void controller_step(double t, std::span<const double> y, ControllerSignals& out);

    /// Full right-hand side with the held input u.
    void rates(double t, std::span<const double> y, double u, std::span<double> dy);

    // state accessors
    std::span<const double> w(std::span<const double> y) const { return y.subspan(0, n_); }
    double zeta(std::span<const double> y) const { return y[n_]; }
    std::span<const double> mu_hat(std::span<const double> y) const { return y.subspan(mu_off_, n_); }
    std::span<const double> weights(std::span<const double> y, std::size_t step) const {
        return y.subspan(w_off_[step], f_basis_[step].node_count());
    }
    double phi_hat(std::span<const double> y) const { return y[phi_off_]; }
    double aleph(std::span<const double> y) const { return y[aleph_off_]; }
    /// differentiator of step i (1-based, 2..n): {delta0, delta1}
    std::span<const double> differentiator(std::span<const double> y, std::size_t step) const {
        return y.subspan(diff_off_ + 2 * (step - 2), 2);
    }

private:
    std::shared_ptr<const PlantModel> plant_;
    ExperimentConfig cfg_;
    std::size_t n_;
    std::vector<RbfBasis> f_basis_;  // input varpi_bar_{i+1} (varpi_bar_n for the last step)
    std::vector<RbfBasis> c_basis_;  // input C_i = [varpi_bar_{i+1}, z_i, aleph]
    std::size_t mu_off_ = 0;
    std::vector<std::size_t> w_off_;
    std::size_t phi_off_ = 0;
    std::size_t diff_off_ = 0;
    std::size_t aleph_off_ = 0;
    std::size_t size_ = 0;

    ControllerSignals sig_;
    std::vector<double> input_;
    std::vector<double> p_;
    std::vector<double> d_;
};

/**
 * Integrates the closed loop for sim.duration seconds at fixed step, evaluating
 * the hybrid trigger once per step boundary. Never throws for run-time failures:
 * a constraint violation or non-finite value stops the run and is reported in
 * the summary with the partial trace kept. Throws ConfigInvalid for bad configs.
 */
SimulationTrace run_simulation(const ExperimentConfig& cfg);
SimulationTrace run_simulation(std::shared_ptr<const PlantModel> plant, const ExperimentConfig& cfg);

/// Summary only; skips trace storage.
RunSummary run_summary(const ExperimentConfig& cfg);

}  // namespace hetc

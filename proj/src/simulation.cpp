#include "hetc/simulation.hpp"

#include "hetc/backstepping.hpp"
#include "hetc/disturbance_observer.hpp"
#include "hetc/errors.hpp"
#include "hetc/integrator.hpp"
#include "hetc/sliding_differentiator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hetc {

std::string_view to_string(RunStatus s) noexcept {
    switch (s) {
        case RunStatus::ok: return "ok";
        case RunStatus::constraint_violation: return "constraint_violation";
        case RunStatus::numerical_divergence: return "numerical_divergence";
    }
    return "unknown";
}

ClosedLoop::ClosedLoop(std::shared_ptr<const PlantModel> plant, const ExperimentConfig& cfg)
    : plant_(std::move(plant)), cfg_(cfg), n_(plant_->order()) {
    resolve_defaults(cfg_);
    if (cfg_.order() != n_) {
        throw ConfigInvalid("bounds.lower", "config order differs from plant order");
    }
    const auto& rbf = cfg_.controller.rbf;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t varpi_dims = std::min(i + 2, n_);
        std::vector<std::pair<double, double>> f_ranges(varpi_dims, rbf.varpi_range);
        f_basis_.push_back(RbfBasis::grid(f_ranges, rbf.nodes_per_dim, rbf.width));

        auto c_ranges = f_ranges;
        c_ranges.push_back(rbf.z_range);
        c_ranges.push_back(rbf.aleph_range);
        c_basis_.push_back(RbfBasis::grid(c_ranges, rbf.nodes_per_dim, rbf.width));
    }

    std::size_t off = n_ + 1;
    mu_off_ = off;
    off += n_;
    for (std::size_t i = 0; i < n_; ++i) {
        w_off_.push_back(off);
        off += f_basis_[i].node_count();
    }
    phi_off_ = off++;
    diff_off_ = off;
    off += 2 * (n_ - 1);
    aleph_off_ = off++;
    size_ = off;

    for (auto* v : {&sig_.varpi, &sig_.omega, &sig_.z, &sig_.d_hat, &sig_.sigma, &sig_.alpha, &sig_.c_norm_sq}) {
        v->assign(n_, 0.0);
    }
    std::size_t max_nodes = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        max_nodes = std::max({max_nodes, f_basis_[i].node_count(), c_basis_[i].node_count()});
    }
    p_.resize(max_nodes);
    input_.reserve(n_ + 2);
    d_.resize(n_);
}

std::vector<double> ClosedLoop::initial_state() const {
    std::vector<double> y(size_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        y[i] = cfg_.init.w[i];
        y[mu_off_ + i] = cfg_.init.mu_hat[i];
    }
    y[n_] = cfg_.init.zeta;
    y[phi_off_] = cfg_.init.phi_hat;
    for (std::size_t s = 0; s + 1 < n_; ++s) {
        y[diff_off_ + 2 * s] = cfg_.controller.diff.delta0_init;
        y[diff_off_ + 2 * s + 1] = cfg_.controller.diff.delta1_init;
    }
    y[aleph_off_] = cfg_.controller.aleph.aleph;
    return y;
}

void ClosedLoop::controller_step(double t, std::span<const double> y, ControllerSignals& out) {
    const auto bounds = plant_->bounds();
    const auto& ctl = cfg_.controller;
    const double phi = y[phi_off_];
    const double aleph = y[aleph_off_];
    for (auto* v : {&out.varpi, &out.omega, &out.z, &out.d_hat, &out.sigma, &out.alpha, &out.c_norm_sq}) {
        v->resize(n_);
    }

    out.reference = plant_->reference(t);
    const auto rs = reference_transform(out.reference.w_r, out.reference.w_r_dot, bounds[0]);
    out.y_r = rs.y_r;
    out.y_r_dot = rs.y_r_dot;

    for (std::size_t i = 0; i < n_; ++i) {
        out.varpi[i] = to_constrained_coords(y[i], bounds[i]);
        out.omega[i] = transform_gain(y[i], bounds[i]);
        out.d_hat[i] = disturbance_estimate({y[mu_off_ + i], ctl.gains[i].m_gain}, out.varpi[i]);
    }

    for (std::size_t i = 0; i < n_; ++i) {
        const auto& g = ctl.gains[i];
        if (i == 0) {
            out.z[0] = out.varpi[0] - out.y_r;
            out.sigma[0] = 0.0;
        } else {
            out.z[i] = out.varpi[i] - out.alpha[i - 1];
            const auto d = differentiator(y, i + 1);
            const DifferentiatorState ds{d[0], d[1], ctl.diff.eps0[i - 1], ctl.diff.eps1[i - 1]};
            out.sigma[i] = differentiator_rates(ds, out.alpha[i - 1]).sigma;
        }

        const std::size_t varpi_dims = std::min(i + 2, n_);
        input_.assign(out.varpi.begin(), out.varpi.begin() + static_cast<std::ptrdiff_t>(varpi_dims));
        input_.push_back(out.z[i]);
        input_.push_back(aleph);
        const std::span<double> pc(p_.data(), c_basis_[i].node_count());
        evaluate_basis_into(input_, c_basis_[i], pc);
        out.c_norm_sq[i] = squared_norm(pc);

        if (i == 0) {
            out.alpha[0] = virtual_control_1(out.z[0], phi, out.c_norm_sq[0], out.omega[0], out.d_hat[0], out.y_r_dot, g);
        } else if (i + 1 < n_) {
            out.alpha[i] =
                virtual_control_mid(out.z[i], phi, out.c_norm_sq[i], out.omega[i], out.d_hat[i], out.sigma[i], g);
        } else {
            out.alpha[i] =
                virtual_control_n(out.z[i], phi, out.c_norm_sq[i], out.omega[i], out.d_hat[i], out.sigma[i], g);
        }
    }
    out.v = continuous_control(out.z[n_ - 1], out.alpha[n_ - 1], ctl.shape);
}

void ClosedLoop::rates(double t, std::span<const double> y, double u, std::span<double> dy) {
    controller_step(t, y, sig_);
    const auto& ctl = cfg_.controller;
    const auto w = y.subspan(0, n_);
    const double zeta = y[n_];

    plant_->drift(w, u, dy.subspan(0, n_));
    plant_->disturbance(w, zeta, t, d_);
    for (std::size_t i = 0; i < n_; ++i) {
        dy[i] += d_[i];
    }
    dy[n_] = plant_->unmodeled_rate(w, zeta, t);

    for (std::size_t i = 0; i < n_; ++i) {
        const auto& g = ctl.gains[i];
        const std::size_t varpi_dims = std::min(i + 2, n_);
        const std::span<const double> in(sig_.varpi.data(), varpi_dims);
        const std::span<double> pf(p_.data(), f_basis_[i].node_count());
        evaluate_basis_into(in, f_basis_[i], pf);

        const auto wi = y.subspan(w_off_[i], pf.size());
        const double coupling = (i + 1 < n_) ? sig_.varpi[i + 1] : sig_.omega[i] * u;
        dy[mu_off_ + i] =
            observer_update_rate({y[mu_off_ + i], g.m_gain}, approximate(wi, pf), coupling, sig_.omega[i], sig_.d_hat[i]);
        weight_update_rate(sig_.z[i], g.m_gain, pf, g.lambda, g.e, wi, dy.subspan(w_off_[i], pf.size()));
    }

    dy[phi_off_] = phi_update_rate_from_norm(sig_.z[n_ - 1], sig_.c_norm_sq[n_ - 1],
                                             {y[phi_off_], ctl.tau, ctl.a0});

    for (std::size_t i = 1; i < n_; ++i) {
        const auto d = differentiator(y, i + 1);
        const DifferentiatorState ds{d[0], d[1], ctl.diff.eps0[i - 1], ctl.diff.eps1[i - 1]};
        const auto r = differentiator_rates(ds, sig_.alpha[i - 1]);
        dy[diff_off_ + 2 * (i - 1)] = r.d_delta0;
        dy[diff_off_ + 2 * (i - 1) + 1] = r.d_delta1;
    }

    DynamicSignal ds = ctl.aleph;
    ds.aleph = y[aleph_off_];
    dy[aleph_off_] = dynamic_signal_rate(ds, w[0]);
}

namespace {

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double vector_norm(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

SimulationTrace simulate(std::shared_ptr<const PlantModel> plant, const ExperimentConfig& cfg_in, bool keep_records) {
    ExperimentConfig cfg = cfg_in;
    resolve_defaults(cfg);
    validate(cfg);

    ClosedLoop loop(plant, cfg);
    const std::size_t n = loop.order();
    const auto bounds = loop.plant().bounds();
    const double h = cfg.sim.step_s;
    const std::size_t steps = cfg.sim.step_count();

    SimulationTrace trace;
    auto& sum = trace.summary;
    sum.steps_planned = steps;
    sum.min_upper_margin.assign(n, std::numeric_limits<double>::infinity());
    sum.min_lower_margin.assign(n, std::numeric_limits<double>::infinity());
    if (keep_records) trace.records.reserve(steps + 1);

    std::vector<double> y = loop.initial_state();
    FixedStepper stepper(cfg.sim.integrator, y.size());
    TriggerState ts;
    // dwell is counted in whole steps; differences of k*h carry rounding error
    std::size_t last_event_step = 0;
    std::size_t min_dwell_steps = std::numeric_limits<std::size_t>::max();
    ControllerSignals sig;
    std::vector<double> d_true(n);

    auto fail = [&](RunStatus status, std::string msg) {
        sum.status = status;
        sum.message = std::move(msg);
    };

    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * h;
        const std::span<const double> ys(y);

        if (!all_finite(ys)) {
            fail(RunStatus::numerical_divergence, "non-finite state at t=" + std::to_string(t));
            break;
        }
        try {
            loop.controller_step(t, ys, sig);
        } catch (const OutOfBounds& e) {
            fail(RunStatus::constraint_violation, std::string(e.what()) + " at t=" + std::to_string(t));
            break;
        } catch (const DegenerateGain& e) {
            fail(RunStatus::numerical_divergence, e.what());
            break;
        }
        if (!std::isfinite(sig.v)) {
            fail(RunStatus::numerical_divergence, "non-finite control at t=" + std::to_string(t));
            break;
        }

        // the hold is initialised with v(0); before that u is taken as 0, so the first event is a fixed one
        const TriggerDecision decision =
            (k == 0) ? TriggerDecision::fixed
                     : should_trigger(measurement_error(sig.v, ts.held_u), ts.held_u, cfg.controller.trigger);
        if (decision != TriggerDecision::none) {
            ts = apply_event(ts, sig.v, t, decision);
            if (k > 0) min_dwell_steps = std::min(min_dwell_steps, k - last_event_step);
            last_event_step = k;
        }

        loop.plant().disturbance(loop.w(ys), loop.zeta(ys), t, d_true);
        for (std::size_t i = 0; i < n; ++i) {
            sum.min_upper_margin[i] = std::min(sum.min_upper_margin[i], bounds[i].delta_upper - y[i]);
            sum.min_lower_margin[i] = std::min(sum.min_lower_margin[i], y[i] + bounds[i].delta_lower);
        }
        sum.max_abs_z1 = std::max(sum.max_abs_z1, std::abs(sig.z[0]));
        if (t >= cfg.transient_s) {
            sum.max_tracking_error = std::max(sum.max_tracking_error, std::abs(y[0] - sig.reference.w_r));
        }

        if (keep_records) {
            StepRecord r;
            r.t = t;
            r.w.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
            r.zeta = loop.zeta(ys);
            r.varpi = sig.varpi;
            r.z = sig.z;
            r.alpha = sig.alpha;
            r.v = sig.v;
            r.u = ts.held_u;
            r.trigger = decision;
            r.d_hat = sig.d_hat;
            r.d_true = d_true;
            const auto mu = loop.mu_hat(ys);
            r.mu_hat.assign(mu.begin(), mu.end());
            r.phi_hat = loop.phi_hat(ys);
            r.aleph = loop.aleph(ys);
            for (std::size_t i = 0; i < n; ++i) {
                r.w_norm.push_back(vector_norm(loop.weights(ys, i)));
            }
            r.w_r = sig.reference.w_r;
            trace.records.push_back(std::move(r));
        }
        sum.steps_completed = k;

        if (k == steps) break;

        const double u = ts.held_u;
        try {
            stepper.step([&](double tt, std::span<const double> yy, std::span<double> dy) { loop.rates(tt, yy, u, dy); },
                         t, h, y);
        } catch (const OutOfBounds& e) {
            fail(RunStatus::constraint_violation,
                 std::string(e.what()) + " during step from t=" + std::to_string(t));
            break;
        } catch (const DegenerateGain& e) {
            fail(RunStatus::numerical_divergence, e.what());
            break;
        }
    }

    sum.events_relative = ts.event_count_relative;
    sum.events_fixed = ts.event_count_fixed;
    sum.min_dwell = min_dwell_steps == std::numeric_limits<std::size_t>::max()
                        ? std::numeric_limits<double>::infinity()
                        : static_cast<double>(min_dwell_steps) * h;
    return trace;
}

}  // namespace

SimulationTrace run_simulation(std::shared_ptr<const PlantModel> plant, const ExperimentConfig& cfg) {
    return simulate(std::move(plant), cfg, true);
}

SimulationTrace run_simulation(const ExperimentConfig& cfg) { return simulate(make_plant(cfg.plant), cfg, true); }

RunSummary run_summary(const ExperimentConfig& cfg) { return simulate(make_plant(cfg.plant), cfg, false).summary; }

}  // namespace hetc

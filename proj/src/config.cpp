#include "hetc/config.hpp"

#include "hetc/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hetc {

std::size_t SimConfig::step_count() const noexcept {
    return static_cast<std::size_t>(std::llround(duration_s / step_s));
}

void SimConfig::validate() const {
    if (!(step_s > 0.0) || !std::isfinite(step_s)) {
        throw ConfigInvalid("sim.step", "must be positive");
    }
    if (!(duration_s >= step_s) || !std::isfinite(duration_s)) {
        throw ConfigInvalid("sim.duration", "must be at least one step");
    }
}

ExperimentConfig example_preset() {
    ExperimentConfig c;
    c.plant.name = "paper_sec4";
    c.plant.bounds = {{2.1, 2.1}, {2.0, 2.4}};

    auto& ctl = c.controller;
    ctl.gains = {
        {.xi = 150.0, .a = 10.0, .lambda = 1.0, .e = 20.0, .m_gain = 15.0},
        {.xi = 185.0, .a = 60.0, .lambda = 1.0, .e = 50.0, .m_gain = 0.05},
    };
    ctl.shape = {.upsilon = 0.3, .big_i = 3.0, .h = 900.0};
    ctl.trigger = {.upsilon = 0.3, .phi = 1.0, .psi = 1.0, .switch_t = 1.0};
    ctl.tau = 1.5;
    ctl.a0 = 1.0;
    ctl.diff.eps0 = {2.9};
    ctl.diff.eps1 = {2.9};
    ctl.aleph = {.aleph = 0.0, .decay = 1.0, .offset = 0.2, .exponent = 2.0};

    c.init.w = {0.1, -0.1};
    c.init.zeta = 0.0;
    c.init.mu_hat = {0.0, 0.0};
    c.init.phi_hat = 0.5;
    return c;
}

ExperimentConfig toy_preset() {
    ExperimentConfig c = example_preset();
    c.plant.name = "toy_linear_scalar";
    c.plant.bounds = {{2.0, 2.0}, {2.0, 2.0}};
    c.plant.disturbances = {0.0, 0.0};
    c.plant.reference = 0.0;
    c.controller.gains = {
        {.xi = 5.0, .a = 10.0, .lambda = 1.0, .e = 5.0, .m_gain = 5.0},
        {.xi = 5.0, .a = 10.0, .lambda = 1.0, .e = 5.0, .m_gain = 5.0},
    };
    c.init.w = {0.0, 0.0};
    c.sim.duration_s = 1.0;
    return c;
}

ExperimentConfig preset(std::string_view name) {
    if (name == "paper_sec4") return example_preset();
    if (name == "toy_linear_scalar") return toy_preset();
    throw ConfigInvalid("preset", "unknown preset '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw ConfigInvalid(std::string(key), "expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
    std::vector<double> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(key, text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<double, double> parse_range(std::string_view key, std::string_view text) {
    const auto v = parse_list(key, text);
    if (v.size() != 2 || !(v[0] < v[1])) {
        throw ConfigInvalid(std::string(key), "expected 'lo, hi' with lo < hi");
    }
    return {v[0], v[1]};
}

bool parse_bool(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigInvalid(std::string(key), "expected true or false");
}

std::string num(double v) { return fmt::format("{}", v); }
std::string list(const std::vector<double>& v) { return fmt::format("{}", fmt::join(v, ", ")); }
std::string range(const std::pair<double, double>& r) { return fmt::format("{}, {}", r.first, r.second); }

struct Field {
    std::function<void(ExperimentConfig&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const ExperimentConfig&)> get;
    // for scalar_setting; null for non-numeric or list keys
    std::function<double(const ExperimentConfig&)> scalar;
};

template <typename Member>
Field scalar_field(Member member) {
    return {[member](ExperimentConfig& c, std::string_view k, std::string_view v) { member(c) = parse_number(k, v); },
            [member](const ExperimentConfig& c) { return num(member(const_cast<ExperimentConfig&>(c))); },
            [member](const ExperimentConfig& c) { return member(const_cast<ExperimentConfig&>(c)); }};
}

// gains.<name> lists map onto one member of every StepGains entry
Field gains_field(double StepGains::*member) {
    return {[member](ExperimentConfig& c, std::string_view k, std::string_view v) {
                const auto values = parse_list(k, v);
                c.controller.gains.resize(values.size());
                for (std::size_t i = 0; i < values.size(); ++i) c.controller.gains[i].*member = values[i];
            },
            [member](const ExperimentConfig& c) {
                std::vector<double> v;
                for (const auto& g : c.controller.gains) v.push_back(g.*member);
                return list(v);
            },
            nullptr};
}

template <typename Member>
Field list_field(Member member) {
    return {[member](ExperimentConfig& c, std::string_view k, std::string_view v) { member(c) = parse_list(k, v); },
            [member](const ExperimentConfig& c) { return list(member(const_cast<ExperimentConfig&>(c))); }, nullptr};
}

template <typename Member>
Field range_field(Member member) {
    return {[member](ExperimentConfig& c, std::string_view k, std::string_view v) { member(c) = parse_range(k, v); },
            [member](const ExperimentConfig& c) { return range(member(const_cast<ExperimentConfig&>(c))); }, nullptr};
}

template <typename Member>
Field string_field(Member member) {
    return {[member](ExperimentConfig& c, std::string_view, std::string_view v) { member(c) = std::string(trim(v)); },
            [member](const ExperimentConfig& c) { return member(const_cast<ExperimentConfig&>(c)); }, nullptr};
}

using FieldTable = std::vector<std::pair<std::string, Field>>;

const FieldTable& fields() {
    static const FieldTable table = [] {
        FieldTable t;
        t.emplace_back("plant", string_field([](ExperimentConfig& c) -> std::string& { return c.plant.name; }));
        t.emplace_back("plant.disturbance",
                       list_field([](ExperimentConfig& c) -> std::vector<double>& { return c.plant.disturbances; }));
        t.emplace_back("plant.reference", scalar_field([](ExperimentConfig& c) -> double& { return c.plant.reference; }));
        t.emplace_back("bounds.lower",
                       Field{[](ExperimentConfig& c, std::string_view k, std::string_view v) {
                                 const auto vals = parse_list(k, v);
                                 c.plant.bounds.resize(vals.size());
                                 for (std::size_t i = 0; i < vals.size(); ++i) c.plant.bounds[i].delta_lower = vals[i];
                             },
                             [](const ExperimentConfig& c) {
                                 std::vector<double> v;
                                 for (const auto& b : c.plant.bounds) v.push_back(b.delta_lower);
                                 return list(v);
                             },
                             nullptr});
        t.emplace_back("bounds.upper",
                       Field{[](ExperimentConfig& c, std::string_view k, std::string_view v) {
                                 const auto vals = parse_list(k, v);
                                 c.plant.bounds.resize(vals.size());
                                 for (std::size_t i = 0; i < vals.size(); ++i) c.plant.bounds[i].delta_upper = vals[i];
                             },
                             [](const ExperimentConfig& c) {
                                 std::vector<double> v;
                                 for (const auto& b : c.plant.bounds) v.push_back(b.delta_upper);
                                 return list(v);
                             },
                             nullptr});
        t.emplace_back("gains.xi", gains_field(&StepGains::xi));
        t.emplace_back("gains.a", gains_field(&StepGains::a));
        t.emplace_back("gains.lambda", gains_field(&StepGains::lambda));
        t.emplace_back("gains.e", gains_field(&StepGains::e));
        t.emplace_back("gains.m", gains_field(&StepGains::m_gain));
        t.emplace_back("control.i", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.shape.big_i; }));
        t.emplace_back("control.h", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.shape.h; }));
        t.emplace_back("trigger.upsilon",
                       Field{[](ExperimentConfig& c, std::string_view k, std::string_view v) {
                                 const double u = parse_number(k, v);
                                 c.controller.trigger.upsilon = u;
                                 c.controller.shape.upsilon = u;
                             },
                             [](const ExperimentConfig& c) { return num(c.controller.trigger.upsilon); },
                             [](const ExperimentConfig& c) { return c.controller.trigger.upsilon; }});
        t.emplace_back("trigger.phi", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.trigger.phi; }));
        t.emplace_back("trigger.psi", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.trigger.psi; }));
        t.emplace_back("trigger.t",
                       scalar_field([](ExperimentConfig& c) -> double& { return c.controller.trigger.switch_t; }));
        t.emplace_back("adapt.tau", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.tau; }));
        t.emplace_back("adapt.a0", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.a0; }));
        t.emplace_back("adapt.phi0", scalar_field([](ExperimentConfig& c) -> double& { return c.init.phi_hat; }));
        t.emplace_back("diff.eps0",
                       list_field([](ExperimentConfig& c) -> std::vector<double>& { return c.controller.diff.eps0; }));
        t.emplace_back("diff.eps1",
                       list_field([](ExperimentConfig& c) -> std::vector<double>& { return c.controller.diff.eps1; }));
        t.emplace_back("diff.delta0",
                       scalar_field([](ExperimentConfig& c) -> double& { return c.controller.diff.delta0_init; }));
        t.emplace_back("diff.delta1",
                       scalar_field([](ExperimentConfig& c) -> double& { return c.controller.diff.delta1_init; }));
        t.emplace_back("rbf.nodes",
                       Field{[](ExperimentConfig& c, std::string_view k, std::string_view v) {
                                 const double n = parse_number(k, v);
                                 if (!(n >= 1.0) || n != std::floor(n)) {
                                     throw ConfigInvalid(std::string(k), "must be a positive integer");
                                 }
                                 c.controller.rbf.nodes_per_dim = static_cast<std::size_t>(n);
                             },
                             [](const ExperimentConfig& c) { return std::to_string(c.controller.rbf.nodes_per_dim); },
                             [](const ExperimentConfig& c) {
                                 return static_cast<double>(c.controller.rbf.nodes_per_dim);
                             }});
        t.emplace_back("rbf.width", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.rbf.width; }));
        t.emplace_back("rbf.varpi_range", range_field([](ExperimentConfig& c) -> std::pair<double, double>& {
                           return c.controller.rbf.varpi_range;
                       }));
        t.emplace_back("rbf.z_range", range_field([](ExperimentConfig& c) -> std::pair<double, double>& {
                           return c.controller.rbf.z_range;
                       }));
        t.emplace_back("rbf.aleph_range", range_field([](ExperimentConfig& c) -> std::pair<double, double>& {
                           return c.controller.rbf.aleph_range;
                       }));
        t.emplace_back("aleph.decay", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.aleph.decay; }));
        t.emplace_back("aleph.offset",
                       scalar_field([](ExperimentConfig& c) -> double& { return c.controller.aleph.offset; }));
        t.emplace_back("aleph.init", scalar_field([](ExperimentConfig& c) -> double& { return c.controller.aleph.aleph; }));
        t.emplace_back("aleph.exponent",
                       scalar_field([](ExperimentConfig& c) -> double& { return c.controller.aleph.exponent; }));
        t.emplace_back("init.w", list_field([](ExperimentConfig& c) -> std::vector<double>& { return c.init.w; }));
        t.emplace_back("init.zeta", scalar_field([](ExperimentConfig& c) -> double& { return c.init.zeta; }));
        t.emplace_back("init.mu", list_field([](ExperimentConfig& c) -> std::vector<double>& { return c.init.mu_hat; }));
        t.emplace_back("sim.step", scalar_field([](ExperimentConfig& c) -> double& { return c.sim.step_s; }));
        t.emplace_back("sim.duration", scalar_field([](ExperimentConfig& c) -> double& { return c.sim.duration_s; }));
        t.emplace_back("sim.integrator",
                       Field{[](ExperimentConfig& c, std::string_view, std::string_view v) {
                                 c.sim.integrator = parse_integrator(trim(v));
                             },
                             [](const ExperimentConfig& c) { return std::string(to_string(c.sim.integrator)); },
                             nullptr});
        t.emplace_back("sim.transient", scalar_field([](ExperimentConfig& c) -> double& { return c.transient_s; }));
        t.emplace_back("output.trace", string_field([](ExperimentConfig& c) -> std::string& { return c.output.trace; }));
        t.emplace_back("output.summary",
                       string_field([](ExperimentConfig& c) -> std::string& { return c.output.summary; }));
        t.emplace_back("output.plots",
                       Field{[](ExperimentConfig& c, std::string_view k, std::string_view v) {
                                 c.output.plots = parse_bool(k, v);
                             },
                             [](const ExperimentConfig& c) { return std::string(c.output.plots ? "true" : "false"); },
                             nullptr});
        return t;
    }();
    return table;
}

const Field& find_field(std::string_view key) {
    const auto& t = fields();
    const auto it = std::find_if(t.begin(), t.end(), [&](const auto& f) { return f.first == key; });
    if (it == t.end()) {
        throw ConfigInvalid(std::string(key), "unknown key");
    }
    return it->second;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    find_field(trim(key)).set(cfg, trim(key), value);
}

double scalar_setting(const ExperimentConfig& cfg, std::string_view key) {
    const auto& f = find_field(key);
    if (!f.scalar) {
        throw ConfigInvalid(std::string(key), "not a numeric scalar key");
    }
    return f.scalar(cfg);
}

ExperimentConfig parse_config(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigInvalid("line " + std::to_string(line_no), "expected 'key = value'");
        }
        entries.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    }

    ExperimentConfig cfg = example_preset();
    bool preset_seen = false;
    bool other_seen = false;
    for (const auto& [key, value] : entries) {
        if (key == "preset") {
            if (preset_seen || other_seen) {
                throw ConfigInvalid("preset", "must appear once, before any other key");
            }
            cfg = preset(value);
            preset_seen = true;
            continue;
        }
        other_seen = true;
        apply_setting(cfg, key, value);
    }
    resolve_defaults(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigInvalid("config", "cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void resolve_defaults(ExperimentConfig& cfg) {
    auto& d = cfg.controller.diff;
    if (d.eps1.size() < d.eps0.size()) {
        for (std::size_t i = d.eps1.size(); i < d.eps0.size(); ++i) d.eps1.push_back(d.eps0[i]);
    }
    if (cfg.init.mu_hat.empty()) {
        cfg.init.mu_hat.assign(cfg.order(), 0.0);
    }
}

namespace {

void require_positive(double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigInvalid(key, "must be positive");
}

void require_length(std::size_t got, std::size_t want, const char* key) {
    if (got != want) {
        throw ConfigInvalid(key, "expected " + std::to_string(want) + " values, got " + std::to_string(got));
    }
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
    const std::size_t n = cfg.order();
    if (n < 2) {
        throw ConfigInvalid("bounds.lower", "the plant needs at least 2 states");
    }
    for (const auto& b : cfg.plant.bounds) {
        if (!(b.delta_lower > 0.0)) throw ConfigInvalid("bounds.lower", "must be positive");
        if (!(b.delta_upper > 0.0)) throw ConfigInvalid("bounds.upper", "must be positive");
    }
    const auto& ctl = cfg.controller;
    require_length(ctl.gains.size(), n, "gains.xi");
    for (std::size_t i = 0; i < n; ++i) {
        ctl.gains[i].validate("gains.");
    }
    ctl.trigger.validate();
    if (ctl.shape.upsilon != ctl.trigger.upsilon) {
        throw ConfigInvalid("trigger.upsilon", "control shape and trigger disagree");
    }
    ctl.shape.validate(ctl.trigger.phi);
    require_positive(ctl.tau, "adapt.tau");
    require_positive(ctl.a0, "adapt.a0");
    if (!(cfg.init.phi_hat >= 0.0)) throw ConfigInvalid("adapt.phi0", "must be non-negative");

    require_length(ctl.diff.eps0.size(), n - 1, "diff.eps0");
    require_length(ctl.diff.eps1.size(), n - 1, "diff.eps1");
    for (double e : ctl.diff.eps0) require_positive(e, "diff.eps0");
    for (double e : ctl.diff.eps1) require_positive(e, "diff.eps1");

    require_positive(ctl.rbf.width, "rbf.width");
    if (ctl.rbf.nodes_per_dim < 1) throw ConfigInvalid("rbf.nodes", "must be at least 1");

    require_positive(ctl.aleph.decay, "aleph.decay");
    if (!(ctl.aleph.offset >= 0.0)) throw ConfigInvalid("aleph.offset", "must be non-negative");
    if (!(ctl.aleph.aleph >= 0.0)) throw ConfigInvalid("aleph.init", "must be non-negative");
    require_positive(ctl.aleph.exponent, "aleph.exponent");

    require_length(cfg.init.w.size(), n, "init.w");
    require_length(cfg.init.mu_hat.size(), n, "init.mu");
    for (std::size_t i = 0; i < n; ++i) {
        if (!inside_bounds(cfg.init.w[i], cfg.plant.bounds[i])) {
            throw ConfigInvalid("init.w", "initial state " + std::to_string(i + 1) + " violates its constraint");
        }
    }
    cfg.sim.validate();
    if (!(cfg.transient_s >= 0.0)) throw ConfigInvalid("sim.transient", "must be non-negative");
    // plant-specific checks happen in its constructor
    (void)make_plant(cfg.plant);
}

std::vector<std::pair<std::string, std::string>> resolved_settings(const ExperimentConfig& cfg) {
    ExperimentConfig resolved = cfg;
    resolve_defaults(resolved);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, field] : fields()) {
        out.emplace_back(key, field.get(resolved));
    }
    return out;
}

std::string to_config_text(const ExperimentConfig& cfg) {
    std::string out;
    for (const auto& [key, value] : resolved_settings(cfg)) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

}  // namespace hetc

#include "hetc/trace_io.hpp"

#include "hetc/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

namespace hetc {

std::vector<std::string> trace_columns(std::size_t n) {
    std::vector<std::string> cols{"t"};
    auto indexed = [&](const char* stem) {
        for (std::size_t i = 1; i <= n; ++i) cols.push_back(fmt::format("{}{}", stem, i));
    };
    indexed("w");
    cols.emplace_back("zeta");
    indexed("varpi");
    indexed("z");
    cols.emplace_back("v");
    cols.emplace_back("u");
    cols.emplace_back("trigger");
    indexed("dhat");
    indexed("dtrue");
    cols.emplace_back("phi_hat");
    cols.emplace_back("aleph");
    indexed("w_norm");
    return cols;
}

void write_trace_csv(std::ostream& out, const SimulationTrace& trace, std::size_t n) {
    fmt::memory_buffer buf;
    auto it = std::back_inserter(buf);
    fmt::format_to(it, "# hetc-trace schema_version={}\n", kTraceSchemaVersion);
    const auto cols = trace_columns(n);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        fmt::format_to(it, "{}{}", c == 0 ? "" : ",", cols[c]);
    }
    buf.push_back('\n');

    auto values = [&](const std::vector<double>& v) {
        for (double x : v) fmt::format_to(it, ",{}", x);
    };
    for (const auto& r : trace.records) {
        fmt::format_to(it, "{}", r.t);
        values(r.w);
        fmt::format_to(it, ",{}", r.zeta);
        values(r.varpi);
        values(r.z);
        fmt::format_to(it, ",{},{},{}", r.v, r.u, static_cast<int>(r.trigger));
        values(r.d_hat);
        values(r.d_true);
        fmt::format_to(it, ",{},{}", r.phi_hat, r.aleph);
        values(r.w_norm);
        buf.push_back('\n');
        if (buf.size() > (1u << 20)) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_trace_csv(const std::filesystem::path& path, const SimulationTrace& trace, std::size_t n) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    write_trace_csv(out, trace, n);
}

namespace {

nlohmann::json finite_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json summary_json(const RunSummary& s, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["schema_version"] = kTraceSchemaVersion;
    j["status"] = std::string(to_string(s.status));
    j["message"] = s.message;
    j["steps_planned"] = s.steps_planned;
    j["steps_completed"] = s.steps_completed;
    j["events"] = {{"total", s.total_events()}, {"relative", s.events_relative}, {"fixed", s.events_fixed}};
    j["min_dwell_s"] = finite_or_null(s.min_dwell);
    j["max_abs_z1"] = s.max_abs_z1;
    j["max_tracking_error_after_transient"] = s.max_tracking_error;
    j["transient_s"] = cfg.transient_s;
    nlohmann::json margins = nlohmann::json::array();
    for (std::size_t i = 0; i < s.min_upper_margin.size(); ++i) {
        margins.push_back({{"state", i + 1},
                           {"min_upper_margin", finite_or_null(s.min_upper_margin[i])},
                           {"min_lower_margin", finite_or_null(s.min_lower_margin[i])}});
    }
    j["constraint_margins"] = margins;
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : resolved_settings(cfg)) {
        config[key] = value;
    }
    j["config"] = config;
    j["gain_lint"] = gain_lint(cfg.controller.gains, cfg.controller.tau);
    return j;
}

namespace {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = false;
};

// Minimal static SVG line chart.
void write_chart(const std::filesystem::path& path, const std::string& title, const std::string& xlabel,
                 const std::vector<Series>& series) {
    constexpr double width = 800, height = 400, left = 70, right = 20, top = 40, bottom = 50;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (!(xmax > xmin)) { xmin -= 1; xmax += 1; }
    if (!(ymax > ymin)) { ymin -= 1; ymax += 1; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (width - left - right); };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * (height - top - bottom); };

    fmt::memory_buffer buf;
    auto it = std::back_inserter(buf);
    fmt::format_to(it,
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
                   "font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
                   width, height);
    fmt::format_to(it, "<text x=\"{}\" y=\"22\" font-size=\"15\">{}</text>\n", left, title);
    fmt::format_to(it, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n", left, top,
                   width - left - right, height - top - bottom);
    for (int k = 0; k <= 4; ++k) {
        const double yv = ymin + (ymax - ymin) * k / 4.0;
        const double xv = xmin + (xmax - xmin) * k / 4.0;
        fmt::format_to(it, "<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", left - 6, py(yv) + 4, yv);
        fmt::format_to(it, "<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", px(xv),
                       height - bottom + 18, xv);
    }
    fmt::format_to(it, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (left + width - right) / 2,
                   height - 10, xlabel);

    double legend_y = top + 16;
    for (const auto& s : series) {
        if (s.markers) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                fmt::format_to(it, "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.5\" fill=\"{}\"/>\n", px(s.x[i]),
                               py(s.y[i]), s.color);
            }
        } else {
            // decimate to at most ~4000 vertices per polyline
            const std::size_t stride = std::max<std::size_t>(1, s.x.size() / 4000);
            fmt::format_to(it, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"", s.color);
            for (std::size_t i = 0; i < s.x.size(); i += stride) {
                fmt::format_to(it, "{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
            }
            fmt::format_to(it, "\"/>\n");
        }
        fmt::format_to(it, "<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", width - right - 150, legend_y, s.color,
                       s.label);
        legend_y += 16;
    }
    fmt::format_to(it, "</svg>\n");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

}  // namespace

std::vector<std::filesystem::path> write_plots(const std::filesystem::path& dir, const SimulationTrace& trace) {
    std::vector<std::filesystem::path> written;
    const auto& rec = trace.records;
    if (rec.empty()) return written;
    std::filesystem::create_directories(dir);

    Series y{"y = w1", "#1f77b4", {}, {}}, yr{"y_r", "#d62728", {}, {}}, u{"u (held)", "#2ca02c", {}, {}}, v{"v", "#aaaaaa", {}, {}};
    Series rel{"relative", "#1f77b4", {}, {}, true}, fix{"fixed", "#ff7f0e", {}, {}, true};
    Series phase{"(nu1, nu2)", "#9467bd", {}, {}}, phi{"phi_hat", "#8c564b", {}, {}};
    double last_event = -1.0;
    for (const auto& r : rec) {
        y.x.push_back(r.t);
        y.y.push_back(r.w[0]);
        yr.x.push_back(r.t);
        yr.y.push_back(r.w_r);
        u.x.push_back(r.t);
        u.y.push_back(r.u);
        v.x.push_back(r.t);
        v.y.push_back(r.v);
        phi.x.push_back(r.t);
        phi.y.push_back(r.phi_hat);
        if (r.d_true.size() >= 2) {
            phase.x.push_back(r.d_true[0] - r.d_hat[0]);
            phase.y.push_back(r.d_true[1] - r.d_hat[1]);
        }
        if (r.trigger != TriggerDecision::none) {
            if (last_event >= 0.0) {
                auto& s = r.trigger == TriggerDecision::relative ? rel : fix;
                s.x.push_back(r.t);
                s.y.push_back(r.t - last_event);
            }
            last_event = r.t;
        }
    }
    auto emit = [&](const char* name, const std::string& title, const std::string& xlabel,
                    const std::vector<Series>& s) {
        const auto path = dir / name;
        write_chart(path, title, xlabel, s);
        written.push_back(path);
    };
    emit("tracking.svg", "Output and reference", "t [s]", {yr, y});
    emit("control.svg", "Controller signal v and held input u", "t [s]", {v, u});
    emit("intervals.svg", "Inter-event intervals", "t [s]", {rel, fix});
    emit("observer_phase.svg", "Disturbance observer errors", "nu1", {phase});
    emit("phi_hat.svg", "Adaptive parameter phi_hat", "t [s]", {phi});
    return written;
}

}  // namespace hetc

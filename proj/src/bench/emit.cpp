#include "tc/bench/emit.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "json.hpp"

#include "tc/numfmt.hpp"

namespace tc::bench {
namespace {

std::string channel_label(int channel, int n_atoms) {
    return channel < n_atoms ? "p_s" + std::to_string(channel + 1) : "p_env";
}

// Two decimals are plenty for pixel coordinates and keep the output stable.
std::string px(double value) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof(buf), "%.2f", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string emit_csv(const SweepReport& report) {
    const int n = report.spec.params.n_atoms;
    std::string out = "t,backend";
    for (int i = 1; i <= n; ++i) {
        out += ",p_s" + std::to_string(i);
    }
    out += ",p_env\n";

    // Backends are already in canonical (alphabetical) order; grid ascending.
    for (const auto& entry : report.series) {
        const std::string name = to_string(entry.backend);
        for (const auto& point : entry.series) {
            out += csv_double(point.t) + "," + name;
            for (int i = 0; i < n; ++i) {
                out += "," + csv_double(point.atom_populations[i]);
            }
            out += "," + csv_double(point.ground_population) + "\n";
        }
    }
    return out;
}

std::string emit_json(const SweepReport& report) {
    nlohmann::ordered_json spec;
    spec["n_atoms"] = report.spec.params.n_atoms;
    spec["g"] = report.spec.params.g;
    spec["kappa"] = report.spec.params.kappa;
    spec["initial_coeffs"] = std::vector<double>(
        report.spec.params.initial_coeffs.begin(), report.spec.params.initial_coeffs.end());
    spec["t_max"] = report.spec.t_max;
    spec["steps"] = report.spec.steps;
    std::vector<std::string> names;
    names.reserve(report.spec.backends.size());
    for (Backend b : report.spec.backends) {
        names.push_back(to_string(b));
    }
    spec["backends"] = names;
    if (report.spec.shots) {
        spec["shots"] = *report.spec.shots;
    } else {
        spec["shots"] = nullptr;
    }
    spec["seed"] = report.spec.seed;

    nlohmann::ordered_json series;
    for (const auto& entry : report.series) {
        nlohmann::ordered_json points = nlohmann::ordered_json::array();
        for (const auto& point : entry.series) {
            nlohmann::ordered_json p;
            p["t"] = point.t;
            p["atom_populations"] = std::vector<double>(
                point.atom_populations.begin(), point.atom_populations.end());
            p["ground_population"] = point.ground_population;
            points.push_back(std::move(p));
        }
        series[to_string(entry.backend)] = std::move(points);
    }

    std::vector<std::vector<double>> diff;
    for (Eigen::Index r = 0; r < report.max_abs_diff.rows(); ++r) {
        diff.emplace_back(report.max_abs_diff.row(r).begin(),
                          report.max_abs_diff.row(r).end());
    }

    nlohmann::ordered_json j;
    j["spec"] = std::move(spec);
    j["time_grid"] = report.time_grid;
    j["series"] = std::move(series);
    j["max_abs_diff"] = diff;
    return j.dump(2) + "\n";
}

std::string emit_svg(const SweepReport& report) {
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 500.0;
    constexpr double kLeft = 62.0;
    constexpr double kRight = 172.0;
    constexpr double kTop = 16.0;
    constexpr double kBottom = 48.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double t_max = report.spec.t_max;
    const int n = report.spec.params.n_atoms;

    static constexpr std::array<const char*, 10> kPalette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    static constexpr std::array<const char*, 4> kDashes = {"", "6,3", "2,2", "9,3,2,3"};

    auto x_of = [&](double t) { return kLeft + (t / t_max) * plot_w; };
    auto y_of = [&](double p) { return kTop + (1.0 - std::clamp(p, 0.0, 1.0)) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";
    out += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(plot_w) +
           "\" height=\"" + px(plot_h) + "\" fill=\"none\" stroke=\"#000000\"/>\n";

    // Axis ticks and labels.
    for (int i = 0; i <= 5; ++i) {
        const double t = t_max * static_cast<double>(i) / 5.0;
        const double x = x_of(t);
        out += "<line x1=\"" + px(x) + "\" y1=\"" + px(kTop + plot_h) + "\" x2=\"" + px(x) +
               "\" y2=\"" + px(kTop + plot_h + 5.0) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + px(x) + "\" y=\"" + px(kTop + plot_h + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               csv_double(t) + "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double p = static_cast<double>(i) / 5.0;
        const double y = y_of(p);
        out += "<line x1=\"" + px(kLeft - 5.0) + "\" y1=\"" + px(y) + "\" x2=\"" + px(kLeft) +
               "\" y2=\"" + px(y) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + px(kLeft - 9.0) + "\" y=\"" + px(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
               csv_double(p) + "</text>\n";
    }
    out += "<text x=\"" + px(kLeft + plot_w / 2.0) + "\" y=\"" + px(kHeight - 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">t</text>\n";
    out += "<text x=\"16\" y=\"" + px(kTop + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " +
           px(kTop + plot_h / 2.0) + ")\">population</text>\n";

    // One polyline per (backend, channel); channels are atoms then env.
    double legend_y = kTop + 12.0;
    for (std::size_t s = 0; s < report.series.size(); ++s) {
        const auto& entry = report.series[s];
        const char* dash = kDashes[s % kDashes.size()];
        for (int ch = 0; ch <= n; ++ch) {
            const char* color = kPalette[static_cast<std::size_t>(ch) % kPalette.size()];
            std::string points;
            for (std::size_t i = 0; i < entry.series.size(); ++i) {
                const auto& point = entry.series[i];
                const double value = ch < n ? point.atom_populations[ch]
                                            : point.ground_population;
                if (!points.empty()) {
                    points += " ";
                }
                points += px(x_of(point.t)) + "," + px(y_of(value));
            }
            out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\"";
            if (dash[0] != '\0') {
                out += " stroke-dasharray=\"" + std::string(dash) + "\"";
            }
            out += " points=\"" + points + "\"/>\n";

            const double lx = kWidth - kRight + 12.0;
            out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(legend_y - 4.0) + "\" x2=\"" +
                   px(lx + 22.0) + "\" y2=\"" + px(legend_y - 4.0) + "\" stroke=\"" + color +
                   "\"";
            if (dash[0] != '\0') {
                out += " stroke-dasharray=\"" + std::string(dash) + "\"";
            }
            out += "/>\n";
            out += "<text x=\"" + px(lx + 28.0) + "\" y=\"" + px(legend_y) +
                   "\" font-family=\"sans-serif\" font-size=\"11\">" +
                   to_string(entry.backend) + " " + channel_label(ch, n) + "</text>\n";
            legend_y += 13.0;
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tc::bench

#include "muskat/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace muskat {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trace_to_csv(const EnergyTrace& trace) {
    std::ostringstream out;
    out << "t,l2,A,B,delta,mu,lyapunov\n";
    for (const EnergyRecord& r : trace.records) {
        out << format_full(r.t) << ',' << format_full(r.l2) << ',' << format_full(r.a_monitor)
            << ',' << format_full(r.b_monitor) << ',' << format_full(r.delta) << ','
            << format_full(r.mu) << ',' << format_full(r.lyapunov) << '\n';
    }
    out << "# config_digest=" << trace.config_digest << '\n';
    out << "# termination=" << to_string(trace.termination) << '\n';
    return out.str();
}

std::string phi_table_to_csv(const Phi& phi, const std::string& digest) {
    std::ostringstream out;
    out << "lambda,phi\n";
    out << format_full(0.0) << ',' << format_full(phi.phi_at_zero()) << '\n';
    for (size_t i = 0; i < phi.lambdas().size(); ++i)
        out << format_full(phi.lambdas()[i]) << ',' << format_full(phi.values()[i]) << '\n';
    if (!digest.empty()) out << "# config_digest=" << digest << '\n';
    return out.str();
}

std::string ratio_report_to_json(const RatioReport& report, const std::string& digest) {
    nlohmann::ordered_json j;
    j["identifier"] = report.identifier;
    j["ensemble"] = {{"L", report.ensemble.grid_half_length},
                     {"N", report.ensemble.grid_size},
                     {"samples", report.ensemble.sample_count},
                     {"decay", report.ensemble.decay},
                     {"cutoff_index", report.ensemble.cutoff_index},
                     {"amplitude", report.ensemble.amplitude},
                     {"seed", report.ensemble.seed}};
    j["excluded_zero_rhs"] = report.excluded_zero_rhs;
    j["max_ratio"] = report.max_ratio;
    j["mean_ratio"] = report.mean_ratio;
    j["samples"] = nlohmann::ordered_json::array();
    for (const RatioReport::Sample& s : report.samples)
        j["samples"].push_back(
            {{"index", s.index}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"ratio", s.ratio}});
    if (!digest.empty()) j["config_digest"] = digest;
    return j.dump(2);
}

std::string run_summary_to_json(const EnergyTrace& trace, const SimConfig& cfg,
                                const SmallnessResult& smallness, double predicted_horizon,
                                bool horizon_applicable) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config_digest"] = trace.config_digest;
    j["termination"] = to_string(trace.termination);
    j["records"] = trace.records.size();
    if (!trace.records.empty()) {
        const EnergyRecord& r = trace.records.back();
        j["final"] = {{"t", r.t},       {"l2", r.l2},       {"A", r.a_monitor},
                      {"B", r.b_monitor}, {"delta", r.delta}, {"mu", r.mu},
                      {"lyapunov", r.lyapunov}};
    }
    j["smallness"] = {{"pass", smallness.pass},
                      {"value", smallness.value},
                      {"margin", smallness.margin},
                      {"c0", cfg.smallness_c0}};
    if (horizon_applicable) j["predicted_T0"] = std::isfinite(predicted_horizon)
                                                    ? nlohmann::ordered_json(predicted_horizon)
                                                    : nlohmann::ordered_json("inf");
    return j.dump(2);
}

namespace {

struct Series {
    const char* label;
    const char* color;
    std::vector<double> values;
};

}  // namespace

std::string trace_to_svg(const EnergyTrace& trace) {
    const int width = 860, height = 480;
    const int ml = 70, mr = 20, mt = 30, mb = 50;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<!-- config_digest=" << trace.config_digest << " -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (trace.records.size() < 2) {
        out << "<text x=\"20\" y=\"40\">trace too short to plot</text>\n</svg>\n";
        return out.str();
    }
    std::vector<double> t;
    Series series[3] = {{"l2", "#1f77b4", {}}, {"A", "#d62728", {}}, {"B", "#2ca02c", {}}};
    for (const EnergyRecord& r : trace.records) {
        t.push_back(r.t);
        series[0].values.push_back(r.l2);
        series[1].values.push_back(r.a_monitor);
        series[2].values.push_back(r.b_monitor);
    }
    double vmax = 0.0;
    for (const Series& s : series)
        for (double v : s.values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;
    const double tmax = t.back() > t.front() ? t.back() : t.front() + 1.0;

    auto xpix = [&](double tv) { return ml + (width - ml - mr) * (tv - t.front()) / (tmax - t.front()); };
    auto ypix = [&](double v) { return height - mb - (height - mt - mb) * (v / vmax); };

    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (width / 2) << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">t</text>\n";
    out << "<text x=\"16\" y=\"" << mt - 8 << "\">" << format_full(vmax) << "</text>\n";

    int li = 0;
    for (const Series& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < t.size(); ++i)
            out << xpix(t[i]) << ',' << ypix(s.values[i]) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 60 << "\" y=\"" << mt + 18 * li << "\" fill=\""
            << s.color << "\">" << s.label << "</text>\n";
        ++li;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace muskat

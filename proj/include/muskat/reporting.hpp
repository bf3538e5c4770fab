#ifndef MUSKAT_REPORTING_HPP
#define MUSKAT_REPORTING_HPP

#include <string>

#include "muskat/inequality_lab.hpp"
#include "muskat/solver.hpp"
#include "muskat/weights.hpp"

namespace muskat {

inline constexpr const char* kVersion = "1.0.0";

/// Trace CSV: header exactly `t,l2,A,B,delta,mu,lyapunov`, one row per
/// record at 17 significant digits, config digest as a trailing
/// comment line.
std::string trace_to_csv(const EnergyTrace& trace);

/// Phi table as two-column CSV (lambda, phi).
std::string phi_table_to_csv(const Phi& phi, const std::string& digest = "");

/// Ratio report as JSON (identifier, ensemble spec, per-sample triples,
/// summary) for the regression harness.
std::string ratio_report_to_json(const RatioReport& report, const std::string& digest = "");

/// Run summary JSON: termination, final monitors, smallness margin,
/// predicted horizon for data-adapted runs.
std::string run_summary_to_json(const EnergyTrace& trace, const SimConfig& cfg,
                                const SmallnessResult& smallness, double predicted_horizon,
                                bool horizon_applicable);

/// Line plot of (t, l2, A, B) as a standalone SVG document.
std::string trace_to_svg(const EnergyTrace& trace);

/// Format a double with 17 significant digits (shortest round-trip not
/// used: fixed formatting keeps outputs byte-stable).
std::string format_full(double v);

}  // namespace muskat

#endif

#ifndef MUSKAT_CONFIG_HPP
#define MUSKAT_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "muskat/solver.hpp"

namespace muskat {

/// Configuration documents are JSON with a fixed key set; unknown keys
/// are rejected and every error carries the offending field path.
class config_error : public std::runtime_error {
  public:
    config_error(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), field_path(path) {}
    std::string field_path;
};

struct SweepSpec {
    std::vector<double> amplitudes;
    std::vector<double> cutoffs;
    std::vector<double> dts;
};

struct ParsedConfig {
    SimConfig sim;
    SweepSpec sweep;  // empty axes -> single cell with the base config
};

/// Parse a configuration document.  Schema keys:
///   grid.L, grid.N, cutoff_n, weight.kind, weight.a, time.dt, time.T,
///   quad.alpha_nodes_per_decade, init.modes (list of {wavenumber,
///   amplitude, phase}), init.random {amplitude, decay, cutoff_index},
///   output.cadence, output.keep_fields, seed, smallness_c0,
///   constants {c1, c2, gronwall_c},
///   sweep {amplitudes, cutoffs, dts}.
/// Missing keys take documented defaults; unknown keys are errors.
ParsedConfig parse_config(const std::string& text);

std::string canonical_config_json(const SimConfig& cfg);

}  // namespace muskat

#endif

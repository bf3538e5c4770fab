#ifndef MUSKAT_RANDOM_FIELDS_HPP
#define MUSKAT_RANDOM_FIELDS_HPP

#include <cstdint>

#include "muskat/grid.hpp"

namespace muskat {

/// Mean-zero random band-limited field: independent modes j = 1..cutoff
/// with complex Gaussian coefficients scaled by amplitude * |k_j|^-decay.
/// Gaussians come from a hand-rolled Box-Muller over mt19937_64 so the
/// draw is reproducible across standard libraries.
GridFunction random_band_limited(const Grid& grid, std::uint64_t seed, double decay,
                                 int cutoff_index, double amplitude = 1.0);

/// Ensemble description used by the inequality lab.
struct EnsembleSpec {
    double grid_half_length = 3.141592653589793;
    int grid_size = 256;
    int sample_count = 50;
    double decay = 3.0;
    int cutoff_index = 32;
    double amplitude = 1.0;
    std::uint64_t seed = 20240101;
};

GridFunction ensemble_member(const EnsembleSpec& spec, int index);

}  // namespace muskat

#endif

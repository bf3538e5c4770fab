#include "muskat/random_fields.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace muskat {

namespace {

// Box-Muller over explicit uniforms; std::normal_distribution is
// implementation-defined and would break frozen baselines.
class GaussianDraw {
  public:
    explicit GaussianDraw(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 1e-300);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    double uniform() {
        return (engine_() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
    }
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

GridFunction random_band_limited(const Grid& grid, std::uint64_t seed, double decay,
                                 int cutoff_index, double amplitude) {
    if (cutoff_index < 1 || cutoff_index >= grid.num_modes() - 1)
        throw std::invalid_argument("random field cutoff must lie strictly below Nyquist");
    GaussianDraw gauss(seed);
    std::vector<std::complex<double>> spec(grid.num_modes(), 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 1; j <= cutoff_index; ++j) {
        const double k = grid.wavenumber(j);
        const double scale = amplitude * std::pow(k, -decay) * inv_sqrt2;
        spec[j] = std::complex<double>(gauss() * scale, gauss() * scale);
    }
    return GridFunction::from_spectrum(grid, std::move(spec));
}

GridFunction ensemble_member(const EnsembleSpec& spec, int index) {
    const Grid grid(spec.grid_half_length, spec.grid_size);
    return random_band_limited(grid, spec.seed + 1315423911ull * static_cast<std::uint64_t>(index),
                               spec.decay, spec.cutoff_index, spec.amplitude);
}

}  // namespace muskat

#ifndef MUSKAT_GRID_HPP
#define MUSKAT_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace muskat {

/// Uniform periodic grid on the torus [-L, L).
///
/// Wavenumbers are k_j = pi*j/L for j in [-N/2, N/2).  N must be a
/// power of two, N >= 8, so that spacing*N == 2*L holds exactly in
/// binary floating point whenever L does not underflow.
class Grid {
  public:
    Grid(double half_length, int size);

    double half_length() const { return half_length_; }
    int size() const { return size_; }
    double spacing() const { return spacing_; }
    double period() const { return 2.0 * half_length_; }

    /// Number of stored (Hermitian-half) spectral coefficients, N/2 + 1.
    int num_modes() const { return size_ / 2 + 1; }

    /// Sample location x_n = -L + n*spacing, n in [0, N).
    double point(int n) const { return -half_length_ + spacing_ * n; }

    /// Nonnegative wavenumber of stored mode j in [0, N/2].
    double wavenumber(int j) const { return fundamental_ * j; }

    /// Smallest positive wavenumber pi/L.
    double fundamental() const { return fundamental_; }

    /// Largest resolved wavenumber pi*(N/2)/L.
    double nyquist() const { return fundamental_ * (size_ / 2); }

    bool operator==(const Grid& other) const {
        return half_length_ == other.half_length_ && size_ == other.size_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

  private:
    double half_length_;
    int size_;
    double spacing_;
    double fundamental_;
};

Grid make_grid(double half_length, int size);

/// Real periodic field with its Fourier spectrum.
///
/// Samples hold f(x_n) at the N grid points; the spectrum holds the
/// N/2+1 Hermitian-half coefficients c_j of the trigonometric
/// interpolant, normalized so that f(x_n) = sum_j c_j e^{2 pi i j n / N}
/// over the full mode set with c_{-j} = conj(c_j).  Both representations
/// are kept consistent from construction; values are immutable.
class GridFunction {
  public:
    static GridFunction zero(const Grid& grid);
    static GridFunction from_samples(const Grid& grid, std::vector<double> samples);
    static GridFunction from_spectrum(const Grid& grid, std::vector<std::complex<double>> spectrum);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }

    int size() const { return grid_.size(); }
    int num_modes() const { return grid_.num_modes(); }

    double l2_norm() const;        // sqrt(integral of f^2 over the torus)
    double max_abs() const;        // grid max of |f|
    double mean() const;           // real part of the zero mode
    bool all_finite() const;

    GridFunction operator+(const GridFunction& other) const;
    GridFunction operator-(const GridFunction& other) const;
    GridFunction operator*(double scale) const;

    /// Pointwise product evaluated on the grid (no dealiasing).
    GridFunction pointwise_product(const GridFunction& other) const;

  private:
    GridFunction(Grid grid, std::vector<double> samples, std::vector<std::complex<double>> spectrum)
        : grid_(grid), samples_(std::move(samples)), spectrum_(std::move(spectrum)) {}

    Grid grid_;
    std::vector<double> samples_;
    std::vector<std::complex<double>> spectrum_;
};

/// L2 inner product over the torus, spacing * sum f*g.
double inner_product(const GridFunction& f, const GridFunction& g);

namespace fft {
/// DFT of real samples, scaled by 1/N; result has N/2+1 entries.
/// Plan creation is cached per size behind a mutex; execution is
/// safe to call concurrently.
std::vector<std::complex<double>> forward(const std::vector<double>& samples);
/// Inverse of forward (input is copied; FFTW would clobber it).
std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum, int size);
}  // namespace fft

}  // namespace muskat

#endif

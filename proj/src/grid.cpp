#include "muskat/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "muskat/errors.hpp"

namespace muskat {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(double half_length, int size) : half_length_(half_length), size_(size) {
    if (!(half_length > 0.0) || !std::isfinite(half_length))
        throw std::invalid_argument("grid half_length must be positive and finite");
    if (!is_power_of_two(size) || size < 8)
        throw std::invalid_argument("grid size must be a power of two, at least 8");
    spacing_ = 2.0 * half_length / size;
    fundamental_ = std::numbers::pi / half_length;
}

Grid make_grid(double half_length, int size) { return Grid(half_length, size); }

namespace fft {

namespace {

// One r2c/c2r plan pair per transform size.  FFTW plan creation is not
// thread safe; execution on caller-owned arrays is.
struct PlanPair {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

PlanPair& plans_for(int n) {
    static std::unordered_map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    std::vector<double> real(n);
    std::vector<std::complex<double>> cplx(n / 2 + 1);
    p.r2c = fftw_plan_dft_r2c_1d(n, real.data(), reinterpret_cast<fftw_complex*>(cplx.data()),
                                 FFTW_ESTIMATE);
    p.c2r = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(cplx.data()), real.data(),
                                 FFTW_ESTIMATE);
    return cache.emplace(n, p).first->second;
}

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    PlanPair& p = plans_for(n);
    std::vector<double> in(samples);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    const double scale = 1.0 / n;
    for (auto& c : out) c *= scale;
    return out;
}

std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum, int size) {
    PlanPair& p = plans_for(size);
    std::vector<std::complex<double>> in(spectrum);
    std::vector<double> out(size);
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    return out;
}

}  // namespace fft

GridFunction GridFunction::zero(const Grid& grid) {
    return GridFunction(grid, std::vector<double>(grid.size(), 0.0),
                        std::vector<std::complex<double>>(grid.num_modes(), 0.0));
}

GridFunction GridFunction::from_samples(const Grid& grid, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw std::invalid_argument("sample count does not match grid size");
    auto spectrum = fft::forward(samples);
    return GridFunction(grid, std::move(samples), std::move(spectrum));
}

GridFunction GridFunction::from_spectrum(const Grid& grid,
                                         std::vector<std::complex<double>> spectrum) {
    if (static_cast<int>(spectrum.size()) != grid.num_modes())
        throw std::invalid_argument("spectrum size does not match grid mode count");
    // Hermitian consistency: the mean and Nyquist coefficients are real.
    spectrum.front() = spectrum.front().real();
    spectrum.back() = spectrum.back().real();
    auto samples = fft::inverse(spectrum, grid.size());
    return GridFunction(grid, std::move(samples), std::move(spectrum));
}

double GridFunction::l2_norm() const {
    double s = 0.0;
    for (double v : samples_) s += v * v;
    return std::sqrt(s * grid_.spacing());
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::mean() const { return spectrum_.front().real(); }

bool GridFunction::all_finite() const {
    for (double v : samples_)
        if (!std::isfinite(v)) return false;
    return true;
}

GridFunction GridFunction::operator+(const GridFunction& other) const {
    if (grid_ != other.grid_) throw std::invalid_argument("grid mismatch in field addition");
    std::vector<double> s(samples_);
    for (size_t i = 0; i < s.size(); ++i) s[i] += other.samples_[i];
    return from_samples(grid_, std::move(s));
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
    if (grid_ != other.grid_) throw std::invalid_argument("grid mismatch in field subtraction");
    std::vector<double> s(samples_);
    for (size_t i = 0; i < s.size(); ++i) s[i] -= other.samples_[i];
    return from_samples(grid_, std::move(s));
}

GridFunction GridFunction::operator*(double scale) const {
    std::vector<std::complex<double>> spec(spectrum_);
    for (auto& c : spec) c *= scale;
    std::vector<double> s(samples_);
    for (auto& v : s) v *= scale;
    return GridFunction(grid_, std::move(s), std::move(spec));
}

GridFunction GridFunction::pointwise_product(const GridFunction& other) const {
    if (grid_ != other.grid_) throw std::invalid_argument("grid mismatch in pointwise product");
    std::vector<double> s(samples_);
    for (size_t i = 0; i < s.size(); ++i) s[i] *= other.samples_[i];
    return from_samples(grid_, std::move(s));
}

double inner_product(const GridFunction& f, const GridFunction& g) {
    if (f.grid() != g.grid()) throw std::invalid_argument("grid mismatch in inner product");
    double s = 0.0;
    const auto& a = f.samples();
    const auto& b = g.samples();
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * f.grid().spacing();
}

}  // namespace muskat

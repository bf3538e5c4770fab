#include "muskat/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "muskat/errors.hpp"

namespace muskat {

GridFunction apply_multiplier(const GridFunction& f, const SymbolFn& m) {
    const Grid& grid = f.grid();
    const int modes = grid.num_modes();
    std::vector<std::complex<double>> spec(f.spectrum());
    for (int j = 0; j < modes; ++j) {
        const std::complex<double> v = m.eval(grid.wavenumber(j));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw numeric_domain_error("symbol '" + m.name + "' non-finite at wavenumber " +
                                       std::to_string(grid.wavenumber(j)));
        spec[j] *= v;
    }
    // Keep the stored half Hermitian-consistent at the shared modes.
    spec.front() = spec.front().real();
    if (m.parity == SymbolParity::odd_imaginary)
        spec.back() = 0.0;
    else
        spec.back() = spec.back().real();
    return GridFunction::from_spectrum(grid, std::move(spec));
}

namespace symbols {

SymbolFn hilbert() {
    return {[](double k) { return std::complex<double>(0.0, k > 0.0 ? -1.0 : 0.0); },
            SymbolParity::odd_imaginary, "hilbert"};
}

SymbolFn derivative() {
    return {[](double k) { return std::complex<double>(0.0, k); }, SymbolParity::odd_imaginary,
            "derivative"};
}

SymbolFn lambda(double power) {
    return {[power](double k) {
                return std::complex<double>(k > 0.0 ? std::pow(k, power) : 0.0, 0.0);
            },
            SymbolParity::even_real, "lambda^" + std::to_string(power)};
}

SymbolFn shift(double displacement) {
    return {[displacement](double k) {
                return std::exp(std::complex<double>(0.0, -displacement * k));
            },
            SymbolParity::general, "shift"};
}

SymbolFn finite_difference(double displacement, int order) {
    return {[displacement, order](double k) {
                const std::complex<double> base =
                    1.0 - std::exp(std::complex<double>(0.0, -displacement * k));
                std::complex<double> v = 1.0;
                for (int i = 0; i < order; ++i) v *= base;
                return v;
            },
            SymbolParity::general, "finite_difference"};
}

}  // namespace symbols

GridFunction hilbert_transform(const GridFunction& f) {
    return apply_multiplier(f, symbols::hilbert());
}

GridFunction derivative(const GridFunction& f) { return apply_multiplier(f, symbols::derivative()); }

GridFunction lambda_power(const GridFunction& f, double power) {
    return apply_multiplier(f, symbols::lambda(power));
}

GridFunction project_jn(const GridFunction& f, double cutoff) {
    const Grid& grid = f.grid();
    std::vector<std::complex<double>> spec(f.spectrum());
    for (int j = 0; j < grid.num_modes(); ++j)
        if (grid.wavenumber(j) > cutoff) spec[j] = 0.0;
    return GridFunction::from_spectrum(grid, std::move(spec));
}

GridFunction finite_difference(const GridFunction& f, double displacement, int order) {
    if (order < 1) throw std::invalid_argument("finite difference order must be >= 1");
    return apply_multiplier(f, symbols::finite_difference(displacement, order));
}

GridFunction shift(const GridFunction& f, double displacement) {
    return apply_multiplier(f, symbols::shift(displacement));
}

GridFunction slope(const GridFunction& f, double alpha) {
    if (alpha == 0.0)
        throw std::invalid_argument("slope requires alpha != 0; use derivative() for the limit");
    return finite_difference(f, alpha, 1) * (1.0 / alpha);
}

GridFunction dealias_two_thirds(const GridFunction& f) {
    const Grid& grid = f.grid();
    const int keep = grid.size() / 3;
    std::vector<std::complex<double>> spec(f.spectrum());
    for (int j = keep + 1; j < grid.num_modes(); ++j) spec[j] = 0.0;
    return GridFunction::from_spectrum(grid, std::move(spec));
}

}  // namespace muskat

#ifndef MUSKAT_OPERATORS_HPP
#define MUSKAT_OPERATORS_HPP

#include <complex>
#include <functional>
#include <string>

#include "muskat/grid.hpp"

namespace muskat {

/// Parity class of a Fourier symbol.  Real output of a multiplier
/// requires m(-xi) == conj(m(xi)); both classes below satisfy it, and
/// `general` symbols are assumed to as well (shift factors and powers
/// of (1 - e^{-ih xi}) fall in this class).
enum class SymbolParity { even_real, odd_imaginary, general };

/// Fourier multiplier symbol, evaluated at nonnegative grid wavenumbers.
struct SymbolFn {
    std::function<std::complex<double>(double)> eval;
    SymbolParity parity = SymbolParity::general;
    std::string name;
};

/// Multiply the spectrum of f pointwise by m(k_j).  The mean mode
/// follows m(0) (homogeneous symbols are defined to vanish there) and
/// the Nyquist coefficient is kept real; odd-imaginary symbols
/// annihilate Nyquist entirely.  Non-finite symbol values raise
/// numeric_domain_error.
GridFunction apply_multiplier(const GridFunction& f, const SymbolFn& m);

namespace symbols {
SymbolFn hilbert();                    // -i sign(xi)
SymbolFn derivative();                 // i xi
SymbolFn lambda(double power = 1.0);   // |xi|^power, 0 at xi = 0
SymbolFn shift(double displacement);   // e^{-i h xi}, f(x) -> f(x - h)
/// (1 - e^{-i h xi})^order, the spectral factor of delta_h^m.
SymbolFn finite_difference(double displacement, int order);
}  // namespace symbols

GridFunction hilbert_transform(const GridFunction& f);
GridFunction derivative(const GridFunction& f);

/// Lambda^power f, the multiplier |xi|^power (Lambda = H d/dx).
GridFunction lambda_power(const GridFunction& f, double power = 1.0);

/// Sharp Fourier truncation: zero every mode with |xi| > cutoff.
GridFunction project_jn(const GridFunction& f, double cutoff);

/// delta_h^m f computed spectrally, exact for band-limited fields at
/// any real displacement h (delta_h f(x) = f(x) - f(x-h)).
GridFunction finite_difference(const GridFunction& f, double displacement, int order);

/// Translate: f(x - displacement).
GridFunction shift(const GridFunction& f, double displacement);

/// Slope (f(x) - f(x - alpha)) / alpha; alpha must be nonzero.
GridFunction slope(const GridFunction& f, double alpha);

/// Two-thirds rule: zero modes with index above floor(N/3).
GridFunction dealias_two_thirds(const GridFunction& f);

}  // namespace muskat

#endif

#ifndef MUSKAT_QUADRATURE_HPP
#define MUSKAT_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace muskat {
namespace quad {

/// (1 - cos h) / h^2 with the removable limit 1/2 at h = 0.
double one_minus_cos_over_h2(double h);

/// Fixed-order Gauss-Legendre on [a, b]; order in {4, 6, 8, 16}.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

/// Composite Gauss-Legendre: [a, b] split into panels of length at
/// most max_panel.  Suited to oscillatory integrands when max_panel
/// resolves the oscillation (~pi/2 for cos); raise the order when the
/// integrand has a branch point near the interval.
double oscillation_resolved(const std::function<double(double)>& f, double a, double b,
                            double max_panel, int order = 6);

/// Adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

/// Exact integral of (1-cos h)/h^2 over [a, b] and [a, inf), valid for
/// a >= 32 (asymptotic sine-integral tail, error far below 1e-14).
double cos_kernel_integral(double a, double b);
double cos_kernel_tail(double a);

/// Symmetric log-spaced mesh on [h_min, h_max] with trapezoid-in-log
/// weights; integrates F over the positive half axis, sum w_i F(h_i).
struct LogMesh {
    std::vector<double> nodes;    // strictly increasing, positive
    std::vector<double> weights;  // trapezoid weights including the h d(log h) factor

    static LogMesh make(double h_min, double h_max, int nodes_per_decade);
};

}  // namespace quad
}  // namespace muskat

#endif

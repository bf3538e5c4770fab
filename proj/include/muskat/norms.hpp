#ifndef MUSKAT_NORMS_HPP
#define MUSKAT_NORMS_HPP

#include "muskat/grid.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/weights.hpp"

namespace muskat {

/// Spectral-route norms are normalized Parseval-consistent: the
/// homogeneous norm of order zero equals the L2 norm of the mean-zero
/// part, and the inhomogeneous norm at order zero equals the L2 norm.

/// Sobolev norm with weight |xi|^(2 sigma) (homogeneous, zero mode
/// excluded) or (1+xi^2)^sigma.
double sobolev_norm(const GridFunction& f, double sigma, bool homogeneous);

/// Fractional logarithmic norm, weight (1+xi^2)^s (log(4+|xi|))^(2a).
double log_sobolev_norm(const GridFunction& f, double s, double a);

/// L2 norm of the multiplier |xi|^s phi(|xi|) applied to f; phi must be
/// tabulated past the grid Nyquist (table_range_error otherwise).
double weighted_norm(const GridFunction& f, double s, const Phi& phi);

/// Same with the weight kappa in place of phi (used by the smallness
/// quantity, whose definition carries kappa directly).
double kappa_weighted_norm(const GridFunction& f, double s, const Kappa& kappa);

/// Apply the multiplier |xi|^s phi(|xi|) (the weighted derivative).
GridFunction weighted_derivative(const GridFunction& f, double s, const Phi& phi);
/// Multiplier |xi|^s phi(|xi|)^2.
GridFunction weighted_derivative_phi2(const GridFunction& f, double s, const Phi& phi);

/// Log-spaced difference mesh for the finite-difference routes.
struct HMeshSpec {
    double h_min = 0.0;  // 0 -> spacing/4
    double h_max = 0.0;  // 0 -> 4 * half_length
    int nodes_per_decade = 32;

    quad::LogMesh resolve(const Grid& grid) const;
};

struct FiniteDifferenceResult {
    double value = 0.0;       // the (semi-)norm
    double tail_bound = 0.0;  // bound on the neglected |h| > h_max contribution
};

/// Weighted Gagliardo semi-norm (1 < s < 2):
/// double integral of |2g(x)-g(x+h)-g(x-h)|^2 (|h|^-s kappa(1/|h|))^2
/// dx dh/|h|, outer h-integral on the log mesh, inner x-integral exact
/// via Parseval.
FiniteDifferenceResult gagliardo_detail(const GridFunction& f, double s, const Kappa& kappa,
                                        const HMeshSpec& mesh = {});
double gagliardo_seminorm(const GridFunction& f, double s, const Kappa& kappa,
                          const HMeshSpec& mesh = {});

/// The s = 0 variant: cutoff |h| < 1/2 and weight
/// [log(4+1/h^2)]^(-1+2a).
double gagliardo_log_seminorm(const GridFunction& f, double a, const HMeshSpec& mesh = {});

/// Triebel-Lizorkin norm (h-integral inside, x-norm outside).
FiniteDifferenceResult triebel_lizorkin_detail(const GridFunction& f, double s, double p, double q,
                                               int m, const HMeshSpec& mesh = {});
double triebel_lizorkin_norm(const GridFunction& f, double s, double p, double q, int m,
                             const HMeshSpec& mesh = {});

/// Besov norm (x-norm inside, h-integral outside).
FiniteDifferenceResult besov_detail(const GridFunction& f, double s, double p, double q, int m,
                                    const HMeshSpec& mesh = {});
double besov_norm(const GridFunction& f, double s, double p, double q, int m,
                  const HMeshSpec& mesh = {});

/// c(s) = int over the real line of (1-cos h)/|h|^(1+2s) dh, 0 < s < 1.
double c_of_s(double s, double tol = 1e-10);

/// Recipe for a (semi-)norm evaluation (configuration-facing).
struct NormSpec {
    enum class Route { spectral, finite_difference };
    enum class Weight { none, power_log, phi };

    double s = 0.0;
    Weight weight = Weight::none;
    double a = 0.0;  // power-log exponent
    bool homogeneous = true;
    Route route = Route::spectral;
    double p = 2.0, q = 2.0;
    int m = 1;
    HMeshSpec mesh;

    void validate() const;  // m consistent with s, p,q >= 1
};

double evaluate_norm(const GridFunction& f, const NormSpec& spec, const Phi* phi = nullptr);

}  // namespace muskat

#endif

#ifndef MUSKAT_MUSKAT_RHS_HPP
#define MUSKAT_MUSKAT_RHS_HPP

#include <utility>
#include <vector>

#include "muskat/grid.hpp"

namespace muskat {

/// Principal-value quadrature for the alpha-integrals: positive nodes
/// with weights (composite Gauss-Legendre on log-spaced panels), each
/// +alpha paired with -alpha and the pair summed innermost.
class AlphaQuadrature {
  public:
    /// nodes_per_decade is split into panels of 8 Gauss points.
    static AlphaQuadrature make(const Grid& grid, int nodes_per_decade = 48,
                                double alpha_min = 0.0, double alpha_max = 0.0);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    double alpha_min() const { return nodes_.front(); }
    double alpha_max() const { return nodes_.back(); }
    int size() const { return static_cast<int>(nodes_.size()); }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Fault hooks for the identity checks (verification only).
enum class RhsFault { none, flip_v_sign, flip_e_split };

/// (1/pi) pv-integral of  dx(slope) / (1 + slope^2)  -- the full
/// nonlocal right-hand side in finite-difference form.
GridFunction muskat_rhs_direct(const GridFunction& f, const AlphaQuadrature& quad);

/// Lambda f realized with the same quadrature and pairing as the
/// nonlinear terms (the pv-integral of -dx(slope)/pi); the algebraic
/// identities between the decomposition routes hold only at matched
/// quadrature, which this provides.
GridFunction lambda_via_quadrature(const GridFunction& f, const AlphaQuadrature& quad);

/// T(f)g = -(1/pi) integral of (dx Delta_alpha g) F_alpha, with
/// F_alpha = slope^2/(1+slope^2) in [0, 1).
GridFunction t_apply(const GridFunction& f, const GridFunction& g, const AlphaQuadrature& quad);

/// Odd/even split of F_alpha at one alpha.
std::pair<GridFunction, GridFunction> odd_even_parts(const GridFunction& f, double alpha);

/// Transport coefficient V = -(1/pi) integral of O(alpha,.)/alpha.
GridFunction transport_coeff_v(const GridFunction& f, const AlphaQuadrature& quad,
                               RhsFault fault = RhsFault::none);

/// Remainder R(f, g) from its own two-integral formula (independent of
/// t_apply, so the paralinearization identity is a real cross-check).
GridFunction remainder_r(const GridFunction& f, const GridFunction& g, const AlphaQuadrature& quad,
                         RhsFault fault = RhsFault::none);

/// The degenerate-parabolicity coefficient fx^2/(1+fx^2).
GridFunction fraction_coefficient(const GridFunction& f);

/// L2 norms of the decomposition pieces and the residual of the
/// paralinearization identity at matched quadrature.
struct DecompositionReport {
    double t_norm = 0.0;
    double fraction_lambda_norm = 0.0;
    double transport_norm = 0.0;
    double remainder_norm = 0.0;
    double residual = 0.0;        // || T(f)g - (fraction*Lambda g + V dx g + R) ||_L2
    double direct_residual = 0.0; // || direct - (-Lambda f + T(f)f) ||_L2 (only for g == f)
    int quad_nodes = 0;
    double quad_alpha_min = 0.0, quad_alpha_max = 0.0;
};

DecompositionReport decompose_nonlinearity(const GridFunction& f, const GridFunction& g,
                                           const AlphaQuadrature& quad,
                                           RhsFault fault = RhsFault::none);

/// RHS - LHS of the three-point contraction inequality for
/// x -> x^2/(1+x^2); nonnegative up to rounding.
double contraction_gap(double x1, double x2, double x3);

}  // namespace muskat

#endif

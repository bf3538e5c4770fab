#include "muskat/muskat_rhs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "muskat/operators.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
const double kGlX[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                       -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                       0.7966664774136267,  0.9602898564975363};
const double kGlW[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                       0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                       0.2223810344533745, 0.1012285362903763};

inline double fraction_of(double slope_value) {
    const double s2 = slope_value * slope_value;
    return s2 / (1.0 + s2);
}

}  // namespace

AlphaQuadrature AlphaQuadrature::make(const Grid& grid, int nodes_per_decade, double alpha_min,
                                      double alpha_max) {
    if (alpha_min <= 0.0) alpha_min = grid.spacing() / 4.0;
    if (alpha_max <= 0.0) alpha_max = grid.half_length();
    if (!(alpha_min < alpha_max))
        throw std::invalid_argument("alpha quadrature requires alpha_min < alpha_max");
    if (alpha_max > grid.half_length() * (1.0 + 1e-12))
        throw std::invalid_argument("alpha quadrature truncates at one period: alpha_max <= L");
    if (nodes_per_decade < 8) throw std::invalid_argument("alpha quadrature needs >= 8 nodes/decade");

    // composite 8-point Gauss-Legendre in log(alpha); panels near
    // alpha_max are additionally capped in plain alpha width, where the
    // integrands' analyticity strip is set by the field amplitude
    // rather than by the log scale
    const int panels_per_decade = std::max(1, nodes_per_decade / 8);
    const double lmin = std::log(alpha_min);
    const double lmax = std::log(alpha_max);
    const int panels = std::max(
        1, static_cast<int>(std::ceil((lmax - lmin) / std::numbers::ln10 * panels_per_decade)));
    const double dl = (lmax - lmin) / panels;
    const double width_cap = alpha_max / 16.0;
    AlphaQuadrature q;
    for (int p = 0; p < panels; ++p) {
        const double la = lmin + p * dl;
        const double lb = la + dl;
        const double a = std::exp(la);
        const double b = std::exp(lb);
        const int sub = std::max(1, static_cast<int>(std::ceil((b - a) / width_cap)));
        for (int s = 0; s < sub; ++s) {
            const double sa = a + (b - a) * s / sub;
            const double sb = a + (b - a) * (s + 1) / sub;
            const double mid = 0.5 * (sa + sb);
            const double half = 0.5 * (sb - sa);
            for (int i = 0; i < 8; ++i) {
                q.nodes_.push_back(mid + half * kGlX[i]);
                q.weights_.push_back(half * kGlW[i]);
            }
        }
    }
    return q;
}

GridFunction muskat_rhs_direct(const GridFunction& f, const AlphaQuadrature& quad) {
    const Grid& grid = f.grid();
    const GridFunction fx = derivative(f);
    const int n = grid.size();
    std::vector<double> accum(n, 0.0);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction sp = slope(f, alpha);
        const GridFunction sm = slope(f, -alpha);
        const GridFunction dsp = slope(fx, alpha);
        const GridFunction dsm = slope(fx, -alpha);
        for (int x = 0; x < n; ++x) {
            // pv pairing summed innermost
            const double pair = dsp.samples()[x] / (1.0 + sp.samples()[x] * sp.samples()[x]) +
                                dsm.samples()[x] / (1.0 + sm.samples()[x] * sm.samples()[x]);
            accum[x] += w * pair;
        }
    }
    const double scale = 1.0 / std::numbers::pi;
    for (double& v : accum) v *= scale;
    return GridFunction::from_samples(grid, std::move(accum));
}

GridFunction lambda_via_quadrature(const GridFunction& f, const AlphaQuadrature& quad) {
    const Grid& grid = f.grid();
    const GridFunction fx = derivative(f);
    const int n = grid.size();
    std::vector<double> accum(n, 0.0);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction dsp = slope(fx, alpha);
        const GridFunction dsm = slope(fx, -alpha);
        for (int x = 0; x < n; ++x) accum[x] += w * (dsp.samples()[x] + dsm.samples()[x]);
    }
    const double scale = -1.0 / std::numbers::pi;
    for (double& v : accum) v *= scale;
    return GridFunction::from_samples(grid, std::move(accum));
}

GridFunction t_apply(const GridFunction& f, const GridFunction& g, const AlphaQuadrature& quad) {
    const Grid& grid = f.grid();
    if (grid != g.grid()) throw std::invalid_argument("t_apply: grid mismatch");
    const GridFunction gx = derivative(g);
    const int n = grid.size();
    std::vector<double> accum(n, 0.0);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction sp = slope(f, alpha);
        const GridFunction sm = slope(f, -alpha);
        const GridFunction dgp = slope(gx, alpha);
        const GridFunction dgm = slope(gx, -alpha);
        for (int x = 0; x < n; ++x) {
            const double pair = dgp.samples()[x] * fraction_of(sp.samples()[x]) +
                                dgm.samples()[x] * fraction_of(sm.samples()[x]);
            accum[x] += w * pair;
        }
    }
    const double scale = -1.0 / std::numbers::pi;
    for (double& v : accum) v *= scale;
    return GridFunction::from_samples(grid, std::move(accum));
}

std::pair<GridFunction, GridFunction> odd_even_parts(const GridFunction& f, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("odd_even_parts requires alpha > 0");
    const Grid& grid = f.grid();
    const GridFunction sp = slope(f, alpha);
    const GridFunction sm = slope(f, -alpha);
    std::vector<double> odd(grid.size()), even(grid.size());
    for (int x = 0; x < grid.size(); ++x) {
        const double fp = fraction_of(sp.samples()[x]);
        const double fm = fraction_of(sm.samples()[x]);
        odd[x] = 0.5 * (fp - fm);
        even[x] = 0.5 * (fp + fm);
    }
    return {GridFunction::from_samples(grid, std::move(odd)),
            GridFunction::from_samples(grid, std::move(even))};
}

GridFunction transport_coeff_v(const GridFunction& f, const AlphaQuadrature& quad, RhsFault fault) {
    const Grid& grid = f.grid();
    const int n = grid.size();
    std::vector<double> accum(n, 0.0);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction sp = slope(f, alpha);
        const GridFunction sm = slope(f, -alpha);
        for (int x = 0; x < n; ++x) {
            const double odd =
                0.5 * (fraction_of(sp.samples()[x]) - fraction_of(sm.samples()[x]));
            // O(alpha,.)/alpha is even in alpha: positive nodes doubled
            accum[x] += w * 2.0 * odd / alpha;
        }
    }
    double scale = -1.0 / std::numbers::pi;
    if (fault == RhsFault::flip_v_sign) scale = -scale;
    for (double& v : accum) v *= scale;
    return GridFunction::from_samples(grid, std::move(accum));
}

GridFunction fraction_coefficient(const GridFunction& f) {
    const GridFunction fx = derivative(f);
    std::vector<double> out(f.size());
    for (int x = 0; x < f.size(); ++x) out[x] = fraction_of(fx.samples()[x]);
    return GridFunction::from_samples(f.grid(), std::move(out));
}

GridFunction remainder_r(const GridFunction& f, const GridFunction& g, const AlphaQuadrature& quad,
                         RhsFault fault) {
    const Grid& grid = f.grid();
    if (grid != g.grid()) throw std::invalid_argument("remainder_r: grid mismatch");
    const GridFunction gx = derivative(g);
    const GridFunction frac = fraction_coefficient(f);
    const double esign = (fault == RhsFault::flip_e_split) ? -1.0 : 1.0;
    const int n = grid.size();
    std::vector<double> accum(n, 0.0);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction sp = slope(f, alpha);
        const GridFunction sm = slope(f, -alpha);
        const GridFunction dgp = slope(gx, alpha);
        const GridFunction dgm = slope(gx, -alpha);
        const GridFunction gxm = shift(gx, alpha);   // dx g(x - alpha)
        const GridFunction gxp = shift(gx, -alpha);  // dx g(x + alpha)
        for (int x = 0; x < n; ++x) {
            const double fp = fraction_of(sp.samples()[x]);
            const double fm = fraction_of(sm.samples()[x]);
            const double odd = 0.5 * (fp - fm);
            const double even = 0.5 * (fp + fm);
            const double centered = even - esign * frac.samples()[x];
            // first integral over both signs: E is even in alpha
            const double first = (dgp.samples()[x] + dgm.samples()[x]) * centered;
            // second integral: O/alpha even, dx g(.-alpha) swaps to dx g(.+alpha)
            const double second = (gxm.samples()[x] + gxp.samples()[x]) * odd / alpha;
            accum[x] += w * (-first + second);
        }
    }
    const double scale = 1.0 / std::numbers::pi;
    for (double& v : accum) v *= scale;
    return GridFunction::from_samples(grid, std::move(accum));
}

DecompositionReport decompose_nonlinearity(const GridFunction& f, const GridFunction& g,
                                           const AlphaQuadrature& quad, RhsFault fault) {
    DecompositionReport rep;
    rep.quad_nodes = quad.size();
    rep.quad_alpha_min = quad.alpha_min();
    rep.quad_alpha_max = quad.alpha_max();

    const GridFunction tfg = t_apply(f, g, quad);
    const GridFunction lam_g = lambda_via_quadrature(g, quad);
    const GridFunction frac_term = fraction_coefficient(f).pointwise_product(lam_g);
    const GridFunction v = transport_coeff_v(f, quad, fault);
    const GridFunction transport = v.pointwise_product(derivative(g));
    const GridFunction r = remainder_r(f, g, quad, fault);

    rep.t_norm = tfg.l2_norm();
    rep.fraction_lambda_norm = frac_term.l2_norm();
    rep.transport_norm = transport.l2_norm();
    rep.remainder_norm = r.l2_norm();
    rep.residual = (tfg - (frac_term + transport + r)).l2_norm();

    const GridFunction direct = muskat_rhs_direct(f, quad);
    const GridFunction lam_f = lambda_via_quadrature(f, quad);
    const GridFunction tf = t_apply(f, f, quad);
    rep.direct_residual = (direct - (lam_f * (-1.0) + tf)).l2_norm();
    return rep;
}

double contraction_gap(double x1, double x2, double x3) {
    const double lhs = std::abs(2.0 * x1 * x1 / (1.0 + x1 * x1) - x2 * x2 / (1.0 + x2 * x2) -
                                x3 * x3 / (1.0 + x3 * x3));
    const double rhs = std::abs(x2 + x3 - 2.0 * x1) + (x2 - x1) * (x2 - x1) +
                       (x3 - x1) * (x3 - x1);
    return rhs - lhs;
}

}  // namespace muskat

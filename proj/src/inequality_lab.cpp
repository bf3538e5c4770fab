#include "muskat/inequality_lab.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "muskat/errors.hpp"
#include "muskat/operators.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

void RatioReport::finalize() {
    max_ratio = 0.0;
    mean_ratio = 0.0;
    for (const Sample& s : samples) {
        max_ratio = std::max(max_ratio, s.ratio);
        mean_ratio += s.ratio;
    }
    if (!samples.empty()) mean_ratio /= static_cast<double>(samples.size());
}

namespace {

void push_sample(RatioReport& rep, int index, double lhs, double rhs) {
    if (rhs == 0.0) {
        ++rep.excluded_zero_rhs;
        return;
    }
    rep.samples.push_back({index, lhs, rhs, lhs / rhs});
}

GridFunction dealiased_product(const GridFunction& a, const GridFunction& b) {
    return dealias_two_thirds(dealias_two_thirds(a).pointwise_product(dealias_two_thirds(b)));
}

GridFunction fraction_field(const GridFunction& slope_field) {
    std::vector<double> out(slope_field.size());
    for (int x = 0; x < slope_field.size(); ++x) {
        const double s = slope_field.samples()[x];
        out[x] = s * s / (1.0 + s * s);
    }
    return GridFunction::from_samples(slope_field.grid(), std::move(out));
}

// T(f)g with every pointwise product dealiased by the two-thirds rule;
// used in the commutator checks so aliasing does not contaminate the
// ratio statistics.
GridFunction t_apply_dealiased(const GridFunction& f, const GridFunction& g,
                               const AlphaQuadrature& quad) {
    const Grid& grid = f.grid();
    const GridFunction gx = derivative(g);
    GridFunction accum = GridFunction::zero(grid);
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const double w = quad.weights()[i];
        const GridFunction fp = fraction_field(slope(f, alpha));
        const GridFunction fm = fraction_field(slope(f, -alpha));
        const GridFunction dgp = slope(gx, alpha);
        const GridFunction dgm = slope(gx, -alpha);
        accum = accum + (dealiased_product(dgp, fp) + dealiased_product(dgm, fm)) * w;
    }
    return accum * (-1.0 / std::numbers::pi);
}

}  // namespace

RatioReport check_v_bound(const EnsembleSpec& ensemble, int alpha_nodes_per_decade) {
    RatioReport rep;
    rep.identifier = "transport-coefficient-H1-bound";
    rep.ensemble = ensemble;
    const Grid grid(ensemble.grid_half_length, ensemble.grid_size);
    const AlphaQuadrature quad = AlphaQuadrature::make(grid, alpha_nodes_per_decade);
    for (int i = 0; i < ensemble.sample_count; ++i) {
        const GridFunction f = ensemble_member(ensemble, i);
        const double lhs = sobolev_norm(transport_coeff_v(f, quad), 1.0, true);
        const double h2 = sobolev_norm(f, 2.0, true);
        const double h74 = sobolev_norm(f, 1.75, true);
        push_sample(rep, i, lhs, h2 + h74 * h74);
    }
    rep.finalize();
    return rep;
}

RatioReport check_commutator_d1phi(const EnsembleSpec& ensemble, const Kappa& kappa,
                                   int alpha_nodes_per_decade) {
    RatioReport rep;
    rep.identifier = "weighted-derivative-commutator";
    rep.ensemble = ensemble;
    const Grid grid(ensemble.grid_half_length, ensemble.grid_size);
    if (ensemble.cutoff_index > grid.size() / 3)
        throw std::invalid_argument("commutator check needs the ensemble cutoff at or below N/3");
    const AlphaQuadrature quad = AlphaQuadrature::make(grid, alpha_nodes_per_decade);
    const bool degenerate = kappa.family() == KappaFamily::degenerate_constant;
    const Phi phi = tabulate_phi(kappa, 1e-6, std::max(1e3, 4.0 * grid.nyquist()), 64, degenerate);
    for (int i = 0; i < ensemble.sample_count; ++i) {
        const GridFunction f = ensemble_member(ensemble, 2 * i);
        const GridFunction g = ensemble_member(ensemble, 2 * i + 1);
        const GridFunction outer = weighted_derivative(t_apply_dealiased(f, g, quad), 1.0, phi);
        const GridFunction inner = t_apply_dealiased(f, weighted_derivative(g, 1.0, phi), quad);
        const double lhs = (outer - inner).l2_norm();

        const double g74 = sobolev_norm(g, 1.75, true);
        const double f74phi = weighted_norm(f, 1.75, phi);
        const double f74phi2 = weighted_derivative_phi2(f, 1.75, phi).l2_norm();
        const double f1912 = sobolev_norm(f, 19.0 / 12.0, true);
        const double g74phi2 = weighted_derivative_phi2(g, 1.75, phi).l2_norm();
        const double f74 = sobolev_norm(f, 1.75, true);
        const double rhs = g74 * f74phi + g74 * std::sqrt(f74phi2) * std::pow(f1912, 1.5) +
                           std::sqrt(g74phi2) * std::sqrt(g74) * f74;
        push_sample(rep, i, lhs, rhs);
    }
    rep.finalize();
    return rep;
}

RatioReport check_r_bound(const EnsembleSpec& ensemble, int alpha_nodes_per_decade) {
    RatioReport rep;
    rep.identifier = "remainder-L2-bound";
    rep.ensemble = ensemble;
    const Grid grid(ensemble.grid_half_length, ensemble.grid_size);
    const AlphaQuadrature quad = AlphaQuadrature::make(grid, alpha_nodes_per_decade);
    for (int i = 0; i < ensemble.sample_count; ++i) {
        const GridFunction f = ensemble_member(ensemble, 2 * i);
        const GridFunction g = ensemble_member(ensemble, 2 * i + 1);
        const double lhs = remainder_r(f, g, quad).l2_norm();
        const double rhs = sobolev_norm(g, 0.75, true) * sobolev_norm(f, 1.75, true);
        push_sample(rep, i, lhs, rhs);
    }
    rep.finalize();
    return rep;
}

RatioReport check_hilbert_commutator(const EnsembleSpec& ensemble) {
    RatioReport rep;
    rep.identifier = "hilbert-commutator";
    rep.ensemble = ensemble;
    for (int i = 0; i < ensemble.sample_count; ++i) {
        const GridFunction g1 = ensemble_member(ensemble, 2 * i);
        const GridFunction g2 = ensemble_member(ensemble, 2 * i + 1);
        const GridFunction dg2 = derivative(g2);
        const GridFunction lhs_field =
            hilbert_transform(dealiased_product(g1, dg2)) -
            dealiased_product(g1, hilbert_transform(dg2));
        const double lhs = lhs_field.l2_norm();
        const double rhs = sobolev_norm(g1, 1.0, true) * sobolev_norm(g2, 0.5, true);
        push_sample(rep, i, lhs, rhs);
    }
    rep.finalize();
    return rep;
}

HardyResult check_hardy(const HardyCase& c) {
    HardyResult out;
    out.name = c.name;
    out.rhs = 4.0 * c.u_squared_integral;
    if (out.rhs == 0.0) {
        out.excluded = true;
        return out;
    }
    auto integrand = [&](double alpha) {
        const double u = c.cumulative(alpha) / alpha;
        return u * u;
    };
    // geometric panels downward from the support end: handles an
    // integrable singularity of u at zero
    double lhs = 0.0;
    double hi = c.support_end;
    for (int k = 0; k < 3000; ++k) {
        const double lo = 0.5 * hi;
        const double panel = quad::gauss_legendre(integrand, lo, hi, 8);
        lhs += panel;
        if ((panel < 1e-14 * std::max(lhs, 1e-300) && k > 8) || lo < 1e-280) break;
        hi = lo;
    }
    // beyond the support U is constant: exact tail U^2 / support_end
    const double u_total = c.cumulative(c.support_end);
    lhs += u_total * u_total / c.support_end;
    out.lhs = lhs;
    out.ratio = lhs / out.rhs;
    out.constant = lhs / c.u_squared_integral;
    return out;
}

InterpolationRecord check_interpolation(const GridFunction& f, const SimContext& ctx, double s) {
    if (!(s >= 1.75 && s <= 2.0))
        throw std::invalid_argument("interpolation check requires 7/4 <= s <= 2");
    InterpolationRecord rec;
    const double a_mon = std::pow(weighted_norm(f, 1.5, ctx.phi()), 2);
    const double b_mon = std::pow(weighted_norm(f, 2.0, ctx.phi()), 2);
    if (a_mon == 0.0 || b_mon == 0.0) {
        rec.excluded = true;
        return rec;
    }
    const double mu = 1.0 / ctx.kappa()(b_mon / a_mon);
    const double l2 = f.l2_norm();

    rec.sobolev_ratio = sobolev_norm(f, s, true) /
                        (mu * std::pow(a_mon, 2.0 - s) * std::pow(b_mon, s - 1.5));
    rec.weighted74_ratio = weighted_derivative_phi2(f, 1.75, ctx.phi()).l2_norm() /
                           ((1.0 / mu) * std::pow(a_mon, 0.25) * std::pow(b_mon, 0.25));
    const double a = ctx.log_exponent();
    const double logfac =
        std::pow(std::log(4.0 + b_mon / (a_mon + l2 * l2)), 0.5 * (1.0 - 2.0 * a));
    rec.slope_sup_ratio = derivative(f).max_abs() / (logfac * (std::sqrt(a_mon) + l2));
    return rec;
}

EnergyInequalityReport check_energy_inequality(const EnergyTrace& trace, const SimContext& ctx,
                                               double c) {
    if (ctx.config().cadence != 1 || trace.snapshots.size() != trace.records.size())
        throw std::invalid_argument(
            "energy inequality check needs a cadence-1 trace with retained snapshots");
    EnergyInequalityReport rep;
    if (trace.records.size() < 3) return rep;
    const double c1 = ctx.config().constant_c1;
    const double c2 = ctx.config().constant_c2;
    rep.min_slack = std::numeric_limits<double>::infinity();
    rep.min_delta_form_slack = std::numeric_limits<double>::infinity();
    rep.calibrated_c = 0.0;
    rep.calibrated_c_unclamped = -std::numeric_limits<double>::infinity();
    for (size_t k = 1; k + 1 < trace.records.size(); ++k) {
        const EnergyRecord& prev = trace.records[k - 1];
        const EnergyRecord& cur = trace.records[k];
        const EnergyRecord& next = trace.records[k + 1];
        const GridFunction& f = trace.snapshots[k];

        EnergySlackRecord rec;
        rec.t = cur.t;
        rec.da_dt = (next.a_monitor - prev.a_monitor) / (next.t - prev.t);

        const GridFunction d2phi = weighted_derivative(f, 2.0, ctx.phi());
        const GridFunction fx = derivative(f);
        double diss = 0.0;
        double max_fx2 = 0.0;
        for (int x = 0; x < f.size(); ++x) {
            const double fx2 = fx.samples()[x] * fx.samples()[x];
            diss += d2phi.samples()[x] * d2phi.samples()[x] / (1.0 + fx2);
            max_fx2 = std::max(max_fx2, fx2);
        }
        rec.dissipation = diss * f.grid().spacing();
        rec.dissipation_floor = cur.b_monitor / (1.0 + max_fx2);

        const double h2 = sobolev_norm(f, 2.0, true);
        const double h74 = sobolev_norm(f, 1.75, true);
        const double h74_in = sobolev_norm(f, 1.75, false);
        const double h1912_in = sobolev_norm(f, 19.0 / 12.0, false);
        const double d74phi = weighted_norm(f, 1.75, ctx.phi());
        const double d74phi2 = weighted_derivative_phi2(f, 1.75, ctx.phi()).l2_norm();
        const double q = (h2 + h74 * h74) * std::sqrt(cur.a_monitor) + d74phi * h74_in +
                         (std::pow(h1912_in, 1.5) + std::sqrt(h74)) * std::sqrt(d74phi2) * h74;
        rec.q_rhs = q * std::sqrt(cur.b_monitor);
        rec.slack = c * rec.q_rhs - rec.da_dt - rec.dissipation;
        rec.delta_form_slack = c2 * (std::sqrt(cur.a_monitor) + cur.a_monitor) * cur.mu *
                                   cur.b_monitor -
                               rec.da_dt - c1 * cur.delta * cur.b_monitor;

        if (rec.q_rhs > 0.0) {
            const double needed = (rec.da_dt + rec.dissipation) / rec.q_rhs;
            rep.calibrated_c = std::max(rep.calibrated_c, needed);
            rep.calibrated_c_unclamped = std::max(rep.calibrated_c_unclamped, needed);
        }
        rep.min_slack = std::min(rep.min_slack, rec.slack);
        rep.min_delta_form_slack = std::min(rep.min_delta_form_slack, rec.delta_form_slack);
        rep.records.push_back(rec);
    }
    return rep;
}

double paralinearization_residual(const GridFunction& f, const GridFunction& g,
                                  const AlphaQuadrature& quad, RhsFault fault) {
    return decompose_nonlinearity(f, g, quad, fault).residual;
}

}  // namespace muskat

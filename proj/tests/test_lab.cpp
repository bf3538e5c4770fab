#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "muskat/inequality_lab.hpp"
#include "muskat/operators.hpp"
#include "muskat/reporting.hpp"
#include "muskat/verification.hpp"

using namespace muskat;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zero-amplitude samples are excluded and counted") {
    EnsembleSpec spec = reference::lab_ensemble(5);
    spec.amplitude = 0.0;
    const RatioReport rep = check_v_bound(spec);
    CHECK(rep.samples.empty());
    CHECK(rep.excluded_zero_rhs == 5);
}

TEST_CASE("transport bound ratio is translation invariant") {
    const EnsembleSpec spec = reference::lab_ensemble(1);
    const Grid g(spec.grid_half_length, spec.grid_size);
    const AlphaQuadrature quad = AlphaQuadrature::make(g);
    const GridFunction f = ensemble_member(spec, 0);
    const GridFunction f_shift = shift(f, 0.731);

    auto ratio_of = [&](const GridFunction& u) {
        const double lhs = sobolev_norm(transport_coeff_v(u, quad), 1.0, true);
        const double h74 = sobolev_norm(u, 1.75, true);
        return lhs / (sobolev_norm(u, 2.0, true) + h74 * h74);
    };
    CHECK(ratio_of(f) == doctest::Approx(ratio_of(f_shift)).epsilon(1e-10));
}

TEST_CASE("commutator checks vanish for trivial inputs") {
    const EnsembleSpec spec = reference::lab_ensemble(1);
    const Grid g(spec.grid_half_length, spec.grid_size);
    const AlphaQuadrature quad = AlphaQuadrature::make(g);
    const Kappa k13 = kappa_power_log(1.0 / 3.0);
    const Phi phi = tabulate_phi(k13, 1e-6, std::max(1e3, 4.0 * g.nyquist()), 64);
    const GridFunction h = ensemble_member(spec, 0);

    // T(0) = 0, so both commutator legs vanish
    const GridFunction zero = GridFunction::zero(g);
    const GridFunction outer = weighted_derivative(t_apply(zero, h, quad), 1.0, phi);
    const GridFunction inner = t_apply(zero, weighted_derivative(h, 1.0, phi), quad);
    CHECK((outer - inner).l2_norm() <= 1e-14);

    // [H, const] dx g = 0 and dx(const) = 0
    const GridFunction c = GridFunction::from_samples(g, std::vector<double>(g.size(), 2.0));
    const GridFunction dg = derivative(h);
    const GridFunction comm =
        hilbert_transform(c.pointwise_product(dg)) - c.pointwise_product(hilbert_transform(dg));
    CHECK(comm.l2_norm() <= 1e-12 * (1.0 + dg.l2_norm()));
    CHECK(derivative(c).max_abs() <= 1e-13);
}

TEST_CASE("commutator ratio is finite for the degenerate constant weight") {
    EnsembleSpec spec = reference::lab_ensemble(5);
    const RatioReport rep = check_commutator_d1phi(spec, kappa_constant());
    CHECK(rep.samples.size() == 5);
    for (const auto& s : rep.samples) {
        CHECK(std::isfinite(s.ratio));
        CHECK(s.ratio >= 0.0);
    }
}

TEST_CASE("remainder ratio is exactly invariant under scaling g") {
    const EnsembleSpec spec = reference::lab_ensemble(1);
    const Grid g(spec.grid_half_length, spec.grid_size);
    const AlphaQuadrature quad = AlphaQuadrature::make(g);
    const GridFunction f = ensemble_member(spec, 0);
    const GridFunction h = ensemble_member(spec, 1);

    auto ratio_of = [&](const GridFunction& gg) {
        return remainder_r(f, gg, quad).l2_norm() /
               (sobolev_norm(gg, 0.75, true) * sobolev_norm(f, 1.75, true));
    };
    CHECK(ratio_of(h) == doctest::Approx(ratio_of(h * 7.0)).epsilon(1e-12));
}

TEST_CASE("hardy corpus") {
    const std::vector<HardyCase> corpus = reference::hardy_corpus();
    const HardyResult step_result = check_hardy(corpus[0]);
    CHECK(step_result.lhs == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(step_result.rhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(step_result.ratio == doctest::Approx(0.5).epsilon(1e-6));

    for (const HardyCase& c : corpus) {
        const HardyResult r = check_hardy(c);
        CHECK_FALSE(r.excluded);
        CHECK(r.constant <= 4.0 * (1.0 + 1e-6));
        CHECK(r.ratio <= 1.0 + 1e-6);
    }

    // the singular case has a known closed form: lhs = 6/0.36
    const HardyResult singular = check_hardy(corpus[1]);
    CHECK(singular.lhs == doctest::Approx(6.0 / 0.36).epsilon(1e-6));

    // zero weight is excluded
    HardyCase zero{"zero", [](double) { return 0.0; }, 1.0, 0.0};
    CHECK(check_hardy(zero).excluded);
}

TEST_CASE("interpolation ratios on a pure mode and an ensemble") {
    const SimConfig cfg = reference::smallness_config(0, 1.0);
    const SimContext ctx(cfg);
    const Grid& g = ctx.grid();

    CHECK(check_interpolation(GridFunction::zero(g), ctx, 1.75).excluded);
    CHECK_THROWS_AS(check_interpolation(GridFunction::zero(g), ctx, 1.5),
                    std::invalid_argument);

    // pure mode: the first ratio reduces to kappa/phi at the wavenumber
    std::vector<double> s(g.size());
    const double k = 1.0;
    for (int n = 0; n < g.size(); ++n) s[n] = 0.2 * std::cos(k * g.point(n));
    const GridFunction mode = GridFunction::from_samples(g, s);
    const InterpolationRecord rec = check_interpolation(mode, ctx, 1.75);
    CHECK(rec.sobolev_ratio ==
          doctest::Approx(ctx.kappa()(k) / ctx.phi()(k)).epsilon(1e-9));
    CHECK(rec.weighted74_ratio == doctest::Approx(ctx.phi()(k) / ctx.kappa()(k)).epsilon(1e-9));
    CHECK(std::isfinite(rec.slope_sup_ratio));

    for (int i = 0; i < 10; ++i) {
        const GridFunction f =
            project_jn(random_band_limited(g, 500 + i, 3.0, g.size() / 8, 0.01), ctx.cutoff());
        const InterpolationRecord r = check_interpolation(f, ctx, 2.0);
        if (r.excluded) continue;
        CHECK(std::isfinite(r.sobolev_ratio));
        CHECK(std::isfinite(r.weighted74_ratio));
        CHECK(std::isfinite(r.slope_sup_ratio));
    }
}

TEST_CASE("energy inequality bookkeeping") {
    SimConfig cfg = reference::smallness_config(0, 1.0);
    cfg.keep_fields = true;
    const SimContext ctx(cfg);
    const EnergyTrace trace = simulate(ctx);
    const EnergyInequalityReport rep = check_energy_inequality(trace, ctx, 1.0);
    REQUIRE(!rep.records.empty());
    for (const EnergySlackRecord& r : rep.records) {
        CHECK(r.dissipation >= r.dissipation_floor * (1.0 - 1e-9));
        CHECK(std::isfinite(r.q_rhs));
        CHECK(r.slack >= 0.0);             // C = 1 comfortably dominates here
        CHECK(r.delta_form_slack >= 0.0);  // delta/mu form with C1 = C2 = 1
    }

    // cadence mismatch is rejected
    SimConfig sparse = cfg;
    sparse.cadence = 2;
    const SimContext sctx(sparse);
    const EnergyTrace strace = simulate(sctx);
    CHECK_THROWS_AS(check_energy_inequality(strace, sctx, 1.0), std::invalid_argument);
}

TEST_CASE("reports are deterministic and serializable") {
    const EnsembleSpec spec = reference::lab_ensemble(5);
    const RatioReport a = check_r_bound(spec);
    const RatioReport b = check_r_bound(spec);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].lhs == b.samples[i].lhs);
        CHECK(a.samples[i].rhs == b.samples[i].rhs);
    }

    const std::string json_text = ratio_report_to_json(a, "deadbeef");
    const auto parsed = nlohmann::json::parse(json_text);
    CHECK(parsed["identifier"] == "remainder-L2-bound");
    CHECK(parsed["samples"].size() == a.samples.size());
    CHECK(parsed["config_digest"] == "deadbeef");
    CHECK(parsed["ensemble"]["seed"] == spec.seed);
}

#include "muskat/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "muskat/errors.hpp"
#include "muskat/operators.hpp"
#include "muskat/random_fields.hpp"

namespace muskat {

double SimConfig::resolved_cutoff() const {
    if (cutoff_n > 0.0) return cutoff_n;
    const Grid g(grid_half_length, grid_size);
    return 0.5 * g.nyquist();
}

double SimConfig::resolved_dt() const {
    if (dt > 0.0) return dt;
    const Grid g(grid_half_length, grid_size);
    return 0.5 * std::min(1.0 / resolved_cutoff(), g.spacing());
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::reached_final_time: return "reached_final_time";
        case Termination::step_failure: return "step_failure";
        case Termination::monitor_blowup: return "monitor_blowup";
    }
    return "unknown";
}

namespace {

GridFunction build_raw_initial(const SimConfig& cfg, const Grid& grid) {
    std::vector<double> samples(grid.size(), 0.0);
    for (const ModeSpec& m : cfg.modes)
        for (int n = 0; n < grid.size(); ++n)
            samples[n] += m.amplitude * std::cos(m.wavenumber * grid.point(n) + m.phase);
    GridFunction f = GridFunction::from_samples(grid, std::move(samples));
    if (cfg.random_init.enabled && cfg.random_init.amplitude != 0.0) {
        const int cutoff = cfg.random_init.cutoff_index > 0 ? cfg.random_init.cutoff_index
                                                            : grid.size() / 8;
        f = f + random_band_limited(grid, cfg.seed, cfg.random_init.decay, cutoff,
                                    cfg.random_init.amplitude);
    }
    return f;
}

}  // namespace

SimContext::SimContext(const SimConfig& cfg)
    : cfg_(cfg),
      grid_(cfg.grid_half_length, cfg.grid_size),
      quad_(AlphaQuadrature::make(grid_, cfg.alpha_nodes_per_decade)) {
    cutoff_ = cfg.resolved_cutoff();
    if (cutoff_ > grid_.nyquist() * (1.0 + 1e-12))
        throw std::invalid_argument("cutoff exceeds the grid Nyquist wavenumber");
    dt_ = cfg.resolved_dt();
    if (!(dt_ > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(cfg.final_time > 0.0)) throw std::invalid_argument("final time must be positive");

    raw_initial_ = std::make_shared<GridFunction>(build_raw_initial(cfg, grid_));
    if (cfg.weight_kind == WeightKind::data_adapted) {
        kappa_ = std::make_shared<Kappa>(data_adapted_kappa(*raw_initial_));
        log_exponent_a_ = 1.0 / 3.0;  // the critical-case exponent in delta
    } else {
        kappa_ = std::make_shared<Kappa>(kappa_power_log(cfg.weight_a));
        log_exponent_a_ = cfg.weight_a;
    }
    const double lambda_max = std::max(1e3, 4.0 * grid_.nyquist());
    const bool degenerate = cfg.weight_kind == WeightKind::power_log && cfg.weight_a == 0.0;
    phi_ = std::make_shared<Phi>(
        tabulate_phi(*kappa_, 1e-6, lambda_max, 64, degenerate));
}

GridFunction SimContext::initial() const { return project_jn(*raw_initial_, cutoff_); }

namespace {

GridFunction decay_factor(const GridFunction& f, double dt) {
    SymbolFn m{[dt](double k) { return std::complex<double>(std::exp(-k * dt), 0.0); },
               SymbolParity::even_real, "heat-factor"};
    return apply_multiplier(f, m);
}

}  // namespace

GridFunction step(const GridFunction& f, double dt, const SimContext& ctx,
                  bool nonlinearity_enabled) {
    const double n = ctx.cutoff();
    auto rhs = [&](const GridFunction& u) {
        return project_jn(t_apply(u, u, ctx.quad()), n);
    };
    GridFunction next = decay_factor(f, dt);
    if (nonlinearity_enabled) {
        const GridFunction k1 = rhs(f);
        const GridFunction half = decay_factor(f + k1 * (0.5 * dt), 0.5 * dt);
        const GridFunction k2 = rhs(half);
        next = next + decay_factor(k2, 0.5 * dt) * dt;
    }
    if (!next.all_finite()) throw step_failure(dt, "non-finite state after time step");
    return next;
}

EnergyRecord monitors(const GridFunction& f, const SimContext& ctx, double f0_l2) {
    EnergyRecord rec;
    rec.l2 = f.l2_norm();
    rec.a_monitor = std::pow(weighted_norm(f, 1.5, ctx.phi()), 2);
    rec.b_monitor = std::pow(weighted_norm(f, 2.0, ctx.phi()), 2);

    const double base = rec.a_monitor + f0_l2 * f0_l2;
    const double ratio_delta = (rec.b_monitor == 0.0 || base == 0.0) ? 0.0 : rec.b_monitor / base;
    const double a = ctx.log_exponent();
    rec.delta = 1.0 / (1.0 + std::pow(std::log(4.0 + ratio_delta), 1.0 - 2.0 * a) * base);

    double ratio_mu = 0.0;
    if (rec.b_monitor > 0.0) {
        // band-limited nonzero fields have A > 0 whenever B > 0
        if (!(rec.a_monitor > 0.0))
            throw numeric_domain_error("monitor ratio undefined: B > 0 with A == 0");
        ratio_mu = rec.b_monitor / rec.a_monitor;
    }
    rec.mu = 1.0 / ctx.kappa()(ratio_mu);

    // Lyapunov log-functional on the same alpha mesh as the nonlinearity
    const AlphaQuadrature& quad = ctx.quad();
    const double dx = f.grid().spacing();
    double lyap = 0.0;
    for (int i = 0; i < quad.size(); ++i) {
        const double alpha = quad.nodes()[i];
        const GridFunction sp = slope(f, alpha);
        const GridFunction sm = slope(f, -alpha);
        double xsum = 0.0;
        for (int x = 0; x < f.size(); ++x) {
            xsum += 0.5 * std::log1p(sp.samples()[x] * sp.samples()[x]);
            xsum += 0.5 * std::log1p(sm.samples()[x] * sm.samples()[x]);
        }
        lyap += quad.weights()[i] * dx * xsum;
    }
    rec.lyapunov = lyap;
    return rec;
}

EnergyTrace simulate(const SimConfig& cfg) { return simulate(SimContext(cfg)); }

EnergyTrace simulate(const SimContext& ctx) {
    const SimConfig& cfg = ctx.config();
    EnergyTrace trace;
    trace.config_digest = config_digest(cfg);

    GridFunction f = ctx.initial();
    trace.initial_l2 = f.l2_norm();
    const int steps = std::max(1, static_cast<int>(std::ceil(cfg.final_time / ctx.dt() - 1e-9)));
    const double dt = cfg.final_time / steps;  // land on T exactly

    auto record = [&](double t, const GridFunction& state) {
        EnergyRecord rec = monitors(state, ctx, trace.initial_l2);
        rec.t = t;
        trace.records.push_back(rec);
        if (cfg.keep_fields) trace.snapshots.push_back(state);
    };

    record(0.0, f);
    const double blowup_threshold = 1e8 * (1.0 + trace.initial_l2);
    for (int k = 1; k <= steps; ++k) {
        try {
            f = step(f, dt, ctx);
        } catch (const step_failure&) {
            trace.termination = Termination::step_failure;
            return trace;
        }
        const double t = k * dt;
        const bool due = (k % std::max(1, cfg.cadence) == 0) || k == steps;
        if (due) {
            record(t, f);
            const EnergyRecord& rec = trace.records.back();
            if (!std::isfinite(rec.l2) || !std::isfinite(rec.a_monitor) ||
                !std::isfinite(rec.b_monitor) || rec.l2 > blowup_threshold) {
                trace.termination = Termination::monitor_blowup;
                return trace;
            }
        }
    }
    trace.termination = Termination::reached_final_time;
    return trace;
}

SmallnessResult smallness_check(const GridFunction& f0, double c0) {
    SmallnessResult out;
    const double norm = kappa_weighted_norm(f0, 1.5, kappa_power_log(1.0 / 3.0));
    const double l2 = f0.l2_norm();
    out.value = norm * (l2 * l2 + 1.0);
    out.pass = out.value <= c0;
    out.margin = c0 - out.value;
    return out;
}

double envelope_functional(double rho, double l2_squared, const Kappa& kappa0, double c1,
                           double c2) {
    if (!(rho > 0.0)) return 0.0;
    double best = -std::numeric_limits<double>::infinity();
    const double lmin = std::log10(rho) - 6.0;
    const double lmax = std::log10(rho) + 12.0;
    const int nodes_per_decade = 24;
    const int n = static_cast<int>((lmax - lmin) * nodes_per_decade) + 1;
    const double amp = std::sqrt(rho) + rho;
    for (int i = 0; i < n; ++i) {
        const double r = std::pow(10.0, lmin + (lmax - lmin) * i / (n - 1));
        const double q = r / rho;
        const double gain = c2 * amp * r / kappa0(q);
        const double dissip =
            0.5 * c1 * r / (1.0 + std::pow(std::log(4.0 + q), 1.0 / 3.0) * (rho + l2_squared));
        best = std::max(best, gain - dissip);
    }
    return best;
}

double predicted_t0(const GridFunction& f0, const Kappa& kappa0, double c1, double c2,
                    bool* envelope_degenerate) {
    if (envelope_degenerate) *envelope_degenerate = false;
    const Grid& grid = f0.grid();
    const double lambda_max = std::max(1e3, 4.0 * grid.nyquist());
    const Phi phi0 = tabulate_phi(kappa0, 1e-6, lambda_max, 64);
    const double m0 = std::pow(weighted_norm(f0, 1.5, phi0), 2);
    if (m0 == 0.0) return std::numeric_limits<double>::infinity();
    const double l2 = f0.l2_norm();
    const double env = envelope_functional(2.0 * m0, l2 * l2, kappa0, c1, c2);
    if (!(env > 0.0)) {
        if (envelope_degenerate) *envelope_degenerate = true;
        return std::numeric_limits<double>::infinity();
    }
    return m0 / env;
}

GapTrace two_solution_gap(const GridFunction& f10, const GridFunction& f20, const SimConfig& cfg) {
    const SimContext ctx(cfg);
    if (f10.grid() != ctx.grid() || f20.grid() != ctx.grid())
        throw std::invalid_argument("two_solution_gap: data grids must match the configuration");

    GridFunction f1 = project_jn(f10, ctx.cutoff());
    GridFunction f2 = project_jn(f20, ctx.cutoff());
    const Kappa third = kappa_power_log(1.0 / 3.0);

    auto budget_integrand = [&](const GridFunction& f) {
        const double norm = kappa_weighted_norm(f, 2.0, third);
        return std::pow(std::log(4.0 + norm), -1.0 / 3.0) * norm * norm;
    };

    GapTrace trace;
    const int steps = std::max(1, static_cast<int>(std::ceil(cfg.final_time / ctx.dt() - 1e-9)));
    const double dt = cfg.final_time / steps;
    const double gap0 = sobolev_norm(f1 - f2, 0.5, true);
    double integral1 = 0.0, integral2 = 0.0;
    double prev1 = budget_integrand(f1), prev2 = budget_integrand(f2);
    auto critical_sq = [&](const GridFunction& f) {
        const double n = kappa_weighted_norm(f, 1.5, third);
        return n * n;
    };
    double sup1 = critical_sq(f1), sup2 = critical_sq(f2);
    trace.records.push_back({0.0, gap0, gap0});
    for (int k = 1; k <= steps; ++k) {
        try {
            f1 = step(f1, dt, ctx);
            f2 = step(f2, dt, ctx);
        } catch (const step_failure&) {
            trace.termination = Termination::step_failure;
            return trace;
        }
        const double cur1 = budget_integrand(f1);
        const double cur2 = budget_integrand(f2);
        integral1 += 0.5 * dt * (prev1 + cur1);
        integral2 += 0.5 * dt * (prev2 + cur2);
        prev1 = cur1;
        prev2 = cur2;
        sup1 = std::max(sup1, critical_sq(f1));
        sup2 = std::max(sup2, critical_sq(f2));
        trace.records.push_back({k * dt, sobolev_norm(f1 - f2, 0.5, true),
                                 gap0 * std::exp(cfg.gronwall_c * (integral1 + integral2))});
    }
    trace.premise_bound = std::max(sup1 + integral1, sup2 + integral2);
    trace.termination = Termination::reached_final_time;
    return trace;
}

std::string config_digest(const SimConfig& cfg) {
    std::ostringstream canon;
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        canon << buf << ';';
    };
    put(cfg.grid_half_length);
    canon << cfg.grid_size << ';';
    put(cfg.resolved_cutoff());
    canon << (cfg.weight_kind == WeightKind::power_log ? "pl" : "da") << ';';
    put(cfg.weight_a);
    put(cfg.resolved_dt());
    put(cfg.final_time);
    canon << cfg.alpha_nodes_per_decade << ';';
    for (const ModeSpec& m : cfg.modes) {
        put(m.wavenumber);
        put(m.amplitude);
        put(m.phase);
    }
    canon << cfg.random_init.enabled << ';';
    put(cfg.random_init.amplitude);
    put(cfg.random_init.decay);
    canon << cfg.random_init.cutoff_index << ';' << cfg.cadence << ';' << cfg.seed << ';';
    put(cfg.smallness_c0);
    put(cfg.constant_c1);
    put(cfg.constant_c2);
    put(cfg.gronwall_c);

    // FNV-1a over the canonical string
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canon.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace muskat

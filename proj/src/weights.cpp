#include "muskat/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "muskat/errors.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

namespace {

constexpr double kLogMaxDouble = 709.78;  // ln(1.79e308)

double log4p_from_log(double log_r) {
    // ln(4 + e^{log_r}) computed without overflow
    if (log_r > 60.0) return log_r + std::log1p(4.0 * std::exp(-log_r));
    return std::log(4.0 + std::exp(log_r));
}

}  // namespace

// ---------------------------------------------------------------------------
// Eta
// ---------------------------------------------------------------------------

Eta::Eta(std::vector<double> log_breakpoints, std::vector<double> tail_masses)
    : log_breakpoints_(std::move(log_breakpoints)), tail_masses_(std::move(tail_masses)) {
    if (log_breakpoints_.size() < 2)
        throw std::invalid_argument("eta needs at least two breakpoints");
    if (log_breakpoints_.size() != tail_masses_.size())
        throw std::invalid_argument("eta breakpoint/tail size mismatch");
    for (size_t k = 1; k < log_breakpoints_.size(); ++k)
        if (!(log_breakpoints_[k] > log_breakpoints_[k - 1]))
            throw std::invalid_argument("eta breakpoints must be strictly increasing");
    if (log_breakpoints_.front() < 5.0 - 1e-12)
        throw std::invalid_argument("eta requires alpha_1 >= e^5");
    log4p_breakpoints_.resize(log_breakpoints_.size());
    for (size_t k = 0; k < log_breakpoints_.size(); ++k)
        log4p_breakpoints_[k] = log4p_from_log(log_breakpoints_[k]);
}

double Eta::breakpoint(int k) const { return std::exp(log_breakpoints_[k]); }

double Eta::operator()(double r) const {
    if (!(r >= 0.0)) throw std::invalid_argument("eta argument must be nonnegative");
    const double log_r = r > 0.0 ? std::log(r) : -std::numeric_limits<double>::infinity();
    if (log_r < log_breakpoints_.front()) return 2.0;
    // interval [alpha_k, alpha_{k+1}) with 1-based k
    size_t k = static_cast<size_t>(std::upper_bound(log_breakpoints_.begin(),
                                                    log_breakpoints_.end(), log_r) -
                                   log_breakpoints_.begin());
    if (k >= log_breakpoints_.size()) k = log_breakpoints_.size() - 1;  // r beyond last: clamp
    const double log4p_r = std::log(4.0 + r);
    const double lo = log4p_breakpoints_[k - 1];
    const double hi = log4p_breakpoints_[k];
    return static_cast<double>(k) + 1.0 + (log4p_r - lo) / (hi - lo);
}

// ---------------------------------------------------------------------------
// Kappa
// ---------------------------------------------------------------------------

Kappa::Kappa(std::function<double(double)> eval, KappaFamily family, double power_log_a,
             std::string name, std::shared_ptr<const Eta> source)
    : eval_(std::move(eval)), family_(family), a_(power_log_a), name_(std::move(name)),
      source_(std::move(source)) {}

Kappa kappa_power_log(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("power-log exponent must lie in [0, 1]");
    return Kappa([a](double r) { return a == 0.0 ? 1.0 : std::pow(std::log(4.0 + r), a); },
                 KappaFamily::power_log, a, "power-log(" + std::to_string(a) + ")");
}

Kappa kappa_constant() {
    return Kappa([](double) { return 1.0; }, KappaFamily::degenerate_constant, 0.0, "constant-1");
}

Kappa kappa_from_table(std::vector<double> r_nodes, std::vector<double> values) {
    if (r_nodes.size() != values.size() || r_nodes.size() < 2)
        throw std::invalid_argument("kappa table needs >= 2 matching nodes");
    for (size_t i = 1; i < r_nodes.size(); ++i)
        if (!(r_nodes[i] > r_nodes[i - 1]))
            throw std::invalid_argument("kappa table nodes must increase");
    auto log_nodes = std::make_shared<std::vector<double>>();
    for (double r : r_nodes) log_nodes->push_back(std::log(4.0 + r));
    auto vals = std::make_shared<std::vector<double>>(std::move(values));
    auto eval = [log_nodes, vals](double r) {
        const double x = std::log(4.0 + r);
        if (x <= log_nodes->front()) return vals->front();
        if (x >= log_nodes->back()) return vals->back();
        const size_t i = static_cast<size_t>(std::upper_bound(log_nodes->begin(),
                                                              log_nodes->end(), x) -
                                             log_nodes->begin()) - 1;
        const double t = (x - (*log_nodes)[i]) / ((*log_nodes)[i + 1] - (*log_nodes)[i]);
        return (*vals)[i] + t * ((*vals)[i + 1] - (*vals)[i]);
    };
    return Kappa(std::move(eval), KappaFamily::piecewise_table,
                 std::numeric_limits<double>::quiet_NaN(), "table");
}

KappaValidation validate_kappa(const Kappa& kappa, const ValidationSpec& spec) {
    std::vector<double> samples;
    samples.push_back(0.0);
    const double lmin = std::log10(spec.r_min_positive);
    const double lmax = std::log10(spec.r_max);
    const int n = static_cast<int>(std::ceil((lmax - lmin) * spec.nodes_per_decade)) + 1;
    for (int i = 0; i < n; ++i)
        samples.push_back(std::pow(10.0, lmin + (lmax - lmin) * i / (n - 1)));

    KappaValidation report;
    report.min_value = std::numeric_limits<double>::infinity();
    report.worst_h1_location = std::numeric_limits<double>::quiet_NaN();
    report.worst_h3_location = std::numeric_limits<double>::quiet_NaN();

    bool monotone = true;
    double worst_h1_drop = 0.0;
    double prev = kappa(samples.front());
    report.min_value = prev;
    for (size_t i = 1; i < samples.size(); ++i) {
        const double v = kappa(samples[i]);
        report.min_value = std::min(report.min_value, v);
        const double drop = prev - v;
        if (drop > 1e-12 * std::max(1.0, std::abs(prev))) {
            monotone = false;
            if (drop > worst_h1_drop) {
                worst_h1_drop = drop;
                report.worst_h1_location = samples[i];
            }
        }
        prev = v;
    }
    const double growth = kappa(spec.r_max) - kappa(0.0);
    report.h1_pass = monotone && growth > 1e-6 &&
                     kappa.family() != KappaFamily::degenerate_constant;

    double c0 = 0.0;
    for (double r : samples) {
        const double base = kappa(r);
        if (base > 0.0) c0 = std::max(c0, kappa(2.0 * r) / base);
    }
    report.empirical_doubling = c0;
    report.h2_pass = c0 <= 2.0;

    bool h3 = true;
    double worst_h3_rise = 0.0;
    double prev_ratio = kappa(samples.front()) / std::log(4.0 + samples.front());
    for (size_t i = 1; i < samples.size(); ++i) {
        const double ratio = kappa(samples[i]) / std::log(4.0 + samples[i]);
        const double rise = ratio - prev_ratio;
        if (rise > 1e-12 * std::max(1.0, prev_ratio)) {
            h3 = false;
            if (rise > worst_h3_rise) {
                worst_h3_rise = rise;
                report.worst_h3_location = samples[i];
            }
        }
        prev_ratio = ratio;
    }
    report.h3_pass = h3;
    report.lower_bound_pass = report.min_value >= 1.0 - 1e-12;
    return report;
}

// ---------------------------------------------------------------------------
// kappa -> phi transform
// ---------------------------------------------------------------------------

double phi_from_kappa(const Kappa& kappa, double lambda, double tol) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("phi argument must be nonnegative");
    tol = std::max(tol, 1e-13);
    const double kappa0 = kappa(0.0);

    auto integrand = [&](double h) { return quad::one_minus_cos_over_h2(h) * kappa(lambda / h); };

    // (0, 1]: geometric panels toward 0; kappa(lambda/h) grows only
    // logarithmically, so panel contributions decay geometrically.
    double small_part = 0.0;
    {
        double hi = 1.0;
        bool converged = false;
        for (int k = 0; k < 400; ++k) {
            const double lo = 0.5 * hi;
            small_part += quad::gauss_legendre(integrand, lo, hi, 16);
            const double arg = std::min(lambda / lo, 1e300);
            const double remainder_bound = lo * kappa(arg);  // 0.5*width*kappa*safety(2)
            if (remainder_bound < 0.25 * tol) {
                converged = true;
                break;
            }
            hi = lo;
        }
        if (!converged)
            throw convergence_error("phi quadrature: small-h panel budget exhausted");
    }

    // [1, H]: resolve the cosine.
    constexpr double kSwitch = 2048.0;
    const double mid_part =
        quad::oscillation_resolved(integrand, 1.0, kSwitch, 0.5 * std::numbers::pi, 8);

    // [H, inf): exact kernel integral per geometric panel against kappa
    // frozen at the log-midpoint.  The freeze is second-order in the
    // panel log-width, and the crossover region lambda/h ~ 4 carries
    // real curvature, so the panels are kept narrow.  Stop when the
    // bracket (kappa(lambda/A) - kappa(0)) times the remaining kernel
    // mass falls below tolerance.
    double far_part = 0.0;
    {
        const double ratio = std::exp(std::numbers::ln2 / 64.0);
        double a = kSwitch;
        bool converged = false;
        for (int k = 0; k < 20000; ++k) {
            const double spread = (kappa(lambda / a) - kappa0) * quad::cos_kernel_tail(a);
            if (spread < 0.25 * tol) {
                far_part += 0.5 * (kappa(lambda / a) + kappa0) * quad::cos_kernel_tail(a);
                converged = true;
                break;
            }
            const double b = ratio * a;
            far_part += kappa(lambda / std::sqrt(a * b)) * quad::cos_kernel_integral(a, b);
            a = b;
        }
        if (!converged) throw convergence_error("phi quadrature: far-tail panel budget exhausted");
    }

    return small_part + mid_part + far_part;
}

// ---------------------------------------------------------------------------
// Phi tabulation
// ---------------------------------------------------------------------------

double Phi::operator()(double lambda) const {
    if (!(lambda >= 0.0)) throw std::invalid_argument("phi argument must be nonnegative");
    if (lambda > lambda_max_ * (1.0 + 1e-12))
        throw table_range_error("phi queried at " + std::to_string(lambda) +
                                " beyond tabulated max " + std::to_string(lambda_max_));
    if (lambda <= lambda_min_) {
        // first segment: linear in lambda between (0, phi0) and the first node
        const double t = lambda / lambda_min_;
        return phi0_ + t * (values_.front() - phi0_);
    }
    const double x = std::log(std::min(lambda, lambda_max_));
    size_t i = static_cast<size_t>(std::upper_bound(log_lambdas_.begin(), log_lambdas_.end(), x) -
                                   log_lambdas_.begin());
    if (i == 0) return values_.front();
    if (i >= log_lambdas_.size()) return values_.back();
    const double t = (x - log_lambdas_[i - 1]) / (log_lambdas_[i] - log_lambdas_[i - 1]);
    return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

Phi tabulate_phi(const Kappa& kappa, double lambda_min, double lambda_max, int nodes_per_decade,
                 bool allow_degenerate, double tol) {
    if (!(lambda_min > 0.0) || !(lambda_max > lambda_min))
        throw std::invalid_argument("phi tabulation needs 0 < lambda_min < lambda_max");
    if (!allow_degenerate) {
        const KappaValidation v = validate_kappa(kappa);
        if (!v.all_pass())
            throw std::invalid_argument(
                "kappa '" + kappa.name() +
                "' fails H1-H3 validation; pass allow_degenerate to tabulate anyway");
    }
    Phi phi(kappa);
    phi.lambda_min_ = lambda_min;
    phi.lambda_max_ = lambda_max;
    phi.phi0_ = phi_from_kappa(kappa, 0.0, tol);
    const double lmin = std::log10(lambda_min);
    const double lmax = std::log10(lambda_max);
    const int n = static_cast<int>(std::ceil((lmax - lmin) * nodes_per_decade)) + 1;
    phi.lambdas_.resize(n);
    phi.log_lambdas_.resize(n);
    phi.values_.resize(n);
    double prev = phi.phi0_;
    phi.c_lower_ = std::numeric_limits<double>::infinity();
    phi.c_upper_ = 0.0;
    {
        const double k0 = kappa(0.0);
        phi.c_lower_ = std::min(phi.c_lower_, phi.phi0_ / k0);
        phi.c_upper_ = std::max(phi.c_upper_, phi.phi0_ / k0);
    }
    for (int i = 0; i < n; ++i) {
        const double lam = std::pow(10.0, lmin + (lmax - lmin) * i / (n - 1));
        double v = phi_from_kappa(kappa, lam, tol);
        v = std::max(v, prev);  // integrand is monotone in lambda; guard rounding
        phi.lambdas_[i] = lam;
        phi.log_lambdas_[i] = std::log(lam);
        phi.values_[i] = v;
        prev = v;
        const double ratio = v / kappa(lam);
        phi.c_lower_ = std::min(phi.c_lower_, ratio);
        phi.c_upper_ = std::max(phi.c_upper_, ratio);
    }
    return phi;
}

// ---------------------------------------------------------------------------
// build_eta and the data-adapted weight
// ---------------------------------------------------------------------------

Eta build_eta(const TailWeight& omega) {
    const double mesh_step = std::log(2.0) / 8.0;  // geometric search mesh, ratio 2^(1/8)
    const bool has_log_form = static_cast<bool>(omega.tail_mass_log);
    const double log_budget = has_log_form ? 8000.0 : kLogMaxDouble;

    auto tail_at_log = [&](double log_alpha) {
        if (has_log_form) return omega.tail_mass_log(log_alpha);
        // without a log-domain form the tail beyond the double range is
        // bounded by its value at the largest representable argument
        return omega.tail_mass(std::exp(std::min(log_alpha, kLogMaxDouble)));
    };
    // smallest mesh point at or after log_from with tail <= threshold
    auto search = [&](double log_from, double threshold) {
        double la = std::max(0.0, log_from);
        la = std::ceil(la / mesh_step - 1e-12) * mesh_step;  // snap to mesh
        for (int i = 0; i < 200000; ++i) {
            if (tail_at_log(la) <= threshold) return la;
            la += mesh_step;
            if (la > log_budget + mesh_step)
                throw not_integrable_error("weight '" + omega.name + "' tail does not reach " +
                                           std::to_string(threshold) +
                                           " within the search budget");
        }
        throw not_integrable_error("weight '" + omega.name + "' tail search budget exhausted");
    };

    std::vector<double> log_breaks;
    std::vector<double> tails;
    // alpha_1 = max(e^5, first mesh alpha with tail <= 1/2)
    double la = std::max(5.0, search(0.0, 0.5));
    log_breaks.push_back(la);
    tails.push_back(tail_at_log(la));
    int k = 1;
    while (log_breaks.back() <= 750.0) {
        ++k;
        const double threshold = std::pow(2.0, -k);
        const double floor_log = 10.0 * log_breaks.back();
        double next;
        if (floor_log > log_budget) {
            if (tail_at_log(log_budget) > threshold)
                throw not_integrable_error("weight '" + omega.name +
                                           "' tail cannot satisfy level " + std::to_string(k));
            next = floor_log;
        } else {
            next = std::max(floor_log, search(floor_log, threshold));
        }
        log_breaks.push_back(next);
        tails.push_back(tail_at_log(std::min(next, log_budget)));
    }
    return Eta(std::move(log_breaks), std::move(tails));
}

TailWeight spectral_tail_weight(const GridFunction& f0) {
    const Grid& grid = f0.grid();
    const double measure = 2.0 * grid.half_length();
    // atoms at the positive wavenumbers, Hermitian multiplicity 2 (1 at Nyquist)
    auto masses = std::make_shared<std::vector<std::pair<double, double>>>();
    for (int j = 1; j < grid.num_modes(); ++j) {
        const double k = grid.wavenumber(j);
        const double mult = (j == grid.num_modes() - 1) ? 1.0 : 2.0;
        const double w = std::pow(k, 3) * std::pow(std::log(4.0 + k * k), 2.0 / 3.0);
        masses->emplace_back(k, measure * mult * w * std::norm(f0.spectrum()[j]));
    }
    auto tail = [masses](double alpha) {
        double s = 0.0;
        for (auto it = masses->rbegin(); it != masses->rend(); ++it) {
            if (it->first < alpha) break;
            s += it->second;
        }
        return s;
    };
    auto tail_log = [tail](double log_alpha) {
        return tail(std::exp(std::min(log_alpha, kLogMaxDouble)));  // compactly supported
    };
    return TailWeight{std::move(tail), std::move(tail_log), "spectral-weight"};
}

Kappa data_adapted_kappa(const GridFunction& f0) {
    auto eta = std::make_shared<Eta>(build_eta(spectral_tail_weight(f0)));
    auto eval = [eta](double r) { return std::pow(std::log(4.0 + r), 1.0 / 3.0) * (*eta)(r); };
    return Kappa(std::move(eval), KappaFamily::data_adapted, 1.0 / 3.0, "data-adapted", eta);
}

}  // namespace muskat

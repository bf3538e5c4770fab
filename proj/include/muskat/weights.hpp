#ifndef MUSKAT_WEIGHTS_HPP
#define MUSKAT_WEIGHTS_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "muskat/grid.hpp"

namespace muskat {

/// Slowly varying weight eta built from breakpoints alpha_k with
/// alpha_1 >= e^5 and alpha_k >= alpha_{k-1}^10.  Equal to 2 below
/// alpha_1, increases by 1 per breakpoint interval, interpolating
/// linearly in log(4 + r).  Breakpoints are stored as logarithms; the
/// last one exceeds the double range so every finite argument falls in
/// a stored interval.
class Eta {
  public:
    Eta(std::vector<double> log_breakpoints, std::vector<double> tail_masses);

    double operator()(double r) const;

    int breakpoint_count() const { return static_cast<int>(log_breakpoints_.size()); }
    double log_breakpoint(int k) const { return log_breakpoints_[k]; }        // ln(alpha_{k+1})
    double breakpoint(int k) const;                                           // may overflow to inf
    double tail_mass(int k) const { return tail_masses_[k]; }

  private:
    std::vector<double> log_breakpoints_;
    std::vector<double> log4p_breakpoints_;  // ln(4 + alpha_k)
    std::vector<double> tail_masses_;
};

enum class KappaFamily { power_log, data_adapted, piecewise_table, degenerate_constant };

/// Weight function kappa: [0, inf) -> [1, inf), at most log growth.
class Kappa {
  public:
    Kappa(std::function<double(double)> eval, KappaFamily family, double power_log_a,
          std::string name, std::shared_ptr<const Eta> source = nullptr);

    double operator()(double r) const { return eval_(r); }
    KappaFamily family() const { return family_; }
    double power_log_exponent() const { return a_; }
    const std::string& name() const { return name_; }
    const std::shared_ptr<const Eta>& source_eta() const { return source_; }

  private:
    std::function<double(double)> eval_;
    KappaFamily family_;
    double a_;
    std::string name_;
    std::shared_ptr<const Eta> source_;
};

/// kappa_a(r) = (log(4 + r))^a, a in [0, 1].
Kappa kappa_power_log(double a);

/// The degenerate test weight kappa == 1 (fails H1 by design).
Kappa kappa_constant();

/// Monotone table (r_i, kappa_i), interpolated linearly in log(4+r),
/// extended flat beyond the last node.
Kappa kappa_from_table(std::vector<double> r_nodes, std::vector<double> values);

struct ValidationSpec {
    double r_max = 1e9;
    int nodes_per_decade = 32;
    double r_min_positive = 1e-3;  // sampling starts at 0, then log-spaced from here
};

struct KappaValidation {
    bool h1_pass = false;          // increasing with nontrivial growth
    bool h2_pass = false;          // doubling constant bounded
    bool h3_pass = false;          // kappa(r)/log(4+r) nonincreasing
    bool lower_bound_pass = false; // kappa >= 1
    double empirical_doubling = 0.0;   // c0 = max kappa(2r)/kappa(r)
    double worst_h1_location = 0.0;    // r of worst monotonicity violation
    double worst_h3_location = 0.0;
    double min_value = 0.0;
    bool all_pass() const { return h1_pass && h2_pass && h3_pass && lower_bound_pass; }
};

KappaValidation validate_kappa(const Kappa& kappa, const ValidationSpec& spec = {});

/// phi(lambda) = int_0^inf (1-cos h)/h^2 kappa(lambda/h) dh.
///
/// Quadrature: geometric panels on (0,1] handle the logarithmic growth
/// of kappa(lambda/h) near h=0; [1, H] is resolved against the cosine;
/// beyond H the kernel integral is exact (sine-integral asymptotics)
/// against kappa frozen per panel, with a bracketed remainder below the
/// tolerance.  Throws convergence_error if the panel budget is hit.
double phi_from_kappa(const Kappa& kappa, double lambda, double tol = 1e-10);

/// Tabulated phi with monotone piecewise-linear interpolation in
/// log(lambda); phi(0) is stored separately and the first segment
/// interpolates linearly in lambda.
class Phi {
  public:
    double operator()(double lambda) const;  // table_range_error above the range

    double lambda_min() const { return lambda_min_; }
    double lambda_max() const { return lambda_max_; }
    double phi_at_zero() const { return phi0_; }
    double equivalence_lower() const { return c_lower_; }  // min phi/kappa over the table
    double equivalence_upper() const { return c_upper_; }  // max phi/kappa
    const Kappa& source() const { return source_; }

    const std::vector<double>& lambdas() const { return lambdas_; }
    const std::vector<double>& values() const { return values_; }

  private:
    friend Phi tabulate_phi(const Kappa&, double, double, int, bool, double);
    Phi(Kappa source) : source_(std::move(source)) {}

    Kappa source_;
    std::vector<double> lambdas_;
    std::vector<double> log_lambdas_;
    std::vector<double> values_;
    double phi0_ = 0.0;
    double lambda_min_ = 0.0, lambda_max_ = 0.0;
    double c_lower_ = 0.0, c_upper_ = 0.0;
};

/// Tabulate phi over [lambda_min, lambda_max].  Requires kappa to pass
/// validation unless allow_degenerate is set.
Phi tabulate_phi(const Kappa& kappa, double lambda_min = 1e-6, double lambda_max = 1e6,
                 int nodes_per_decade = 64, bool allow_degenerate = false, double tol = 1e-10);

/// Integrable weight handed to build_eta: only the tail mass
/// t(alpha) = integral of omega over {|r| >= alpha} is required.
/// Breakpoints can land beyond the double range (alpha_k grows like
/// alpha_{k-1}^10); supply tail_mass_log (argument ln alpha) when the
/// tail has a closed form there, otherwise the tail is bounded by its
/// value at the largest representable argument.
struct TailWeight {
    std::function<double(double)> tail_mass;
    std::function<double(double)> tail_mass_log;  // optional
    std::string name;
};

/// Lemma-style construction of Eta from an integrable weight: picks the
/// smallest admissible breakpoints on a geometric search mesh
/// (alpha_1 = max(e^5, first alpha with tail <= 1/2), then
/// alpha_k = max(alpha_{k-1}^10, first alpha with tail <= 2^-k)).
/// Throws not_integrable_error when the tail does not fall below the
/// required threshold within the search budget.
Eta build_eta(const TailWeight& omega);

/// Data-adapted weight of the critical case: builds the spectral weight
/// omega(xi) = |xi|^3 log(4+xi^2)^{2/3} |f0^(xi)|^2 from the initial
/// datum, applies build_eta, and returns
/// kappa_0(r) = (log(4+r))^{1/3} * eta(r).
Kappa data_adapted_kappa(const GridFunction& f0);

/// The discrete tail weight used by data_adapted_kappa (exposed for
/// tests and diagnostics).
TailWeight spectral_tail_weight(const GridFunction& f0);

}  // namespace muskat

#endif

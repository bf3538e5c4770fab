#ifndef MUSKAT_INEQUALITY_LAB_HPP
#define MUSKAT_INEQUALITY_LAB_HPP

#include <functional>
#include <string>
#include <vector>

#include "muskat/muskat_rhs.hpp"
#include "muskat/random_fields.hpp"
#include "muskat/solver.hpp"
#include "muskat/weights.hpp"

namespace muskat {

/// LHS/RHS statistics for one inequality over a sample ensemble.
struct RatioReport {
    std::string identifier;
    EnsembleSpec ensemble;
    struct Sample {
        int index = 0;
        double lhs = 0.0;
        double rhs = 0.0;
        double ratio = 0.0;
    };
    std::vector<Sample> samples;
    int excluded_zero_rhs = 0;  // samples dropped because RHS == 0
    double max_ratio = 0.0;
    double mean_ratio = 0.0;

    void finalize();
};

/// ||V(f)||_H1 against ||f||_H2 + ||f||_{H^{7/4}}^2 (homogeneous norms).
RatioReport check_v_bound(const EnsembleSpec& ensemble, int alpha_nodes_per_decade = 48);

/// Commutator of the weighted derivative <D>^{1,phi} with T(f) against
/// the three-term right-hand side.  Pointwise products inside the
/// commutator legs are dealiased by the two-thirds rule (the ensemble
/// cutoff must sit at or below N/3).
RatioReport check_commutator_d1phi(const EnsembleSpec& ensemble, const Kappa& kappa,
                                   int alpha_nodes_per_decade = 48);

/// ||R(f,g)||_L2 against ||g||_{H^{3/4}} ||f||_{H^{7/4}}.
RatioReport check_r_bound(const EnsembleSpec& ensemble, int alpha_nodes_per_decade = 48);

/// ||[H, g1] dx g2||_L2 against ||g1||_H1 ||g2||_{H^{1/2}}.
RatioReport check_hilbert_commutator(const EnsembleSpec& ensemble);

/// Hardy inequality for one nonnegative u on (0, inf):
///   int (alpha^-1 int_0^alpha u)^2 dalpha <= 4 int u^2.
struct HardyCase {
    std::string name;
    std::function<double(double)> cumulative;  // U(alpha) = int_0^alpha u
    double support_end = 1.0;                  // u vanishes beyond this point
    double u_squared_integral = 0.0;           // int_0^inf u^2 (exact)
};

struct HardyResult {
    std::string name;
    double lhs = 0.0;       // int (U/alpha)^2
    double rhs = 0.0;       // 4 int u^2
    double ratio = 0.0;     // lhs / rhs  (Hardy: <= 1)
    double constant = 0.0;  // lhs / int u^2  (Hardy: <= 4)
    bool excluded = false;  // RHS == 0
};

HardyResult check_hardy(const HardyCase& c);

/// The three interpolation inequalities of the uniform-estimate step,
/// reported as LHS/RHS ratios for one field.
struct InterpolationRecord {
    double sobolev_ratio = 0.0;    // ||f||_{H^s} vs mu A^{2-s} B^{s-3/2}
    double weighted74_ratio = 0.0; // ||<D>^{7/4,phi^2} f|| vs mu^-1 A^{1/4} B^{1/4}
    double slope_sup_ratio = 0.0;  // ||dx f||_inf vs log(4+B/(A+l2^2))^{(1-2a)/2} (sqrt A + l2)
    bool excluded = false;
};

InterpolationRecord check_interpolation(const GridFunction& f, const SimContext& ctx, double s);

/// Per-step bookkeeping of the parabolic energy inequality along a
/// cadence-1 trace with retained snapshots: the dissipation integral,
/// the Q(f) right-hand side, and the slack for a given constant C; plus
/// the delta/mu form.
struct EnergySlackRecord {
    double t = 0.0;
    double da_dt = 0.0;       // discrete time derivative of A
    double dissipation = 0.0; // int |<D>^{2,phi} f|^2 / (1 + fx^2) dx
    double q_rhs = 0.0;       // Q(f) ||<D>^{2,phi} f||
    double slack = 0.0;       // C * q_rhs - da_dt - dissipation
    double delta_form_slack = 0.0;  // C2 (sqrt A + A) mu B - da_dt - C1 delta B
    double dissipation_floor = 0.0; // B / (1 + max fx^2)
};

struct EnergyInequalityReport {
    std::vector<EnergySlackRecord> records;
    double min_slack = 0.0;
    double min_delta_form_slack = 0.0;
    double calibrated_c = 0.0;            // smallest C >= 0 making every slack nonnegative
    double calibrated_c_unclamped = 0.0;  // max of (dA/dt + dissipation)/q_rhs, sign kept
};

EnergyInequalityReport check_energy_inequality(const EnergyTrace& trace, const SimContext& ctx,
                                               double c = 1.0);

/// Paralinearization residual with optional fault injection; the clean
/// residual is rounding-level, a sign fault inflates it by many orders.
double paralinearization_residual(const GridFunction& f, const GridFunction& g,
                                  const AlphaQuadrature& quad, RhsFault fault = RhsFault::none);

}  // namespace muskat

#endif

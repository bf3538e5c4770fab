#ifndef MUSKAT_VERIFICATION_HPP
#define MUSKAT_VERIFICATION_HPP

#include <string>
#include <vector>

#include "muskat/inequality_lab.hpp"
#include "muskat/random_fields.hpp"
#include "muskat/solver.hpp"

namespace muskat {

/// Fixed reference configurations shared by the verify command, the
/// regression baselines and the acceptance suite.
namespace reference {

EnsembleSpec lab_ensemble(int samples = 50);
EnsembleSpec gagliardo_ensemble();  // 100 fields

/// Seeded small-data configuration (passes the smallness check);
/// seed_index in [0, 10).
SimConfig smallness_config(int seed_index, double final_time = 5.0);

/// Two-solution pair: base modes and a 1e-4 perturbation in one mode.
SimConfig two_solution_config();
GridFunction two_solution_f1(const SimConfig& cfg);
GridFunction two_solution_f2(const SimConfig& cfg);

std::vector<HardyCase> hardy_corpus();
std::vector<TailWeight> eta_corpus();

}  // namespace reference

/// One verification item: a hard invariant or a baseline-drift check.
struct VerificationItem {
    std::string id;
    bool pass = false;
    double value = 0.0;
    double reference = 0.0;  // baseline or bound
    std::string note;
};

struct VerificationOutcome {
    std::vector<VerificationItem> items;
    bool all_pass = true;
    /// Lab ratio reports serialized as JSON, keyed by file stem.
    std::vector<std::pair<std::string, std::string>> reports;

    void add(const std::string& id, bool pass, double value, double reference,
             const std::string& note = "");
};

/// Full verification: hard invariants (contraction sweep, Hardy corpus,
/// residual identities, maximum-principle runs) plus drift checks of
/// every recorded ratio baseline.  A nonzero fault is injected into the
/// paralinearization identity check (it must then fail).
VerificationOutcome run_verification(RhsFault fault = RhsFault::none);

/// Recompute all baseline statistics (for freezing into baselines.hpp).
std::string compute_baseline_report();

}  // namespace muskat

#endif

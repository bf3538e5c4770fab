#ifndef MUSKAT_BASELINES_HPP
#define MUSKAT_BASELINES_HPP

// Regression baselines recorded from the reference run (fixed seeds,
// default ensembles).  The verify command and the acceptance suite
// fail when a recomputed statistic drifts more than the stated
// tolerance from these values.  Regenerate with `muskat verify
// --print-baselines` after an intentional numerical change.

namespace muskat {
namespace baselines {

// gagliardo vs spectral weighted norm, s = 3/2, power-log(1/3),
// 100 fields of the reference ensemble
inline constexpr double kGagliardoRatioLo = 1.3253635718909549;
inline constexpr double kGagliardoRatioHi = 1.3333836265063792;

// inequality-lab max ratios over the reference ensembles
inline constexpr double kVBoundMaxRatio = 0.19272420346949587;
inline constexpr double kCommutatorMaxRatio = 0.037155891266662709;
inline constexpr double kRBoundMaxRatio = 0.094143310011096965;
inline constexpr double kHilbertCommutatorMaxRatio = 0.39544246311795767;

// interpolation checks, max over the reference ensemble
inline constexpr double kInterpSobolevMaxRatio = 0.62948504530763838;
inline constexpr double kInterpWeighted74MaxRatio = 1.564439770603187;
inline constexpr double kInterpSlopeSupMaxRatio = 0.012793965659570321;

// energy inequality: max of (dA/dt + dissipation)/(Q sqrt(B)) over the
// reference run, sign kept (negative: dissipation absorbs everything)
inline constexpr double kEnergyCalibratedC = -16.329693336436584;

// two-solution experiment: max gap/budget over t > 0
inline constexpr double kTwoSolutionMaxRatio = 0.88246434704596322;

// discrete integral of delta*B over the smallness runs, divided by
// A(0); the recorded maximum over the 10 seeded runs
inline constexpr double kDissipationBudgetMax = 0.50920567693246033;

inline constexpr double kDriftTolerance = 0.10;  // 10% relative

}  // namespace baselines
}  // namespace muskat

#endif

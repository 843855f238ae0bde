#pragma once

#include <array>
#include <string>

#include "slocc3/measures.hpp"
#include "slocc3/states.hpp"

namespace slocc3 {

enum class PairMeasure { ConcurrenceSquared, Formation, E2 };

const char* pair_measure_name(PairMeasure m) noexcept;  // "c2", "ef", "e2"

// Residual bipartite entanglement after tracing out one party.
// e_tau and c2_min always use the squared concurrence; e_bar and e_min use
// the requested measure.
struct ResidualReport {
  PairMeasure measure;
  double e_bar;    // mean of the pairwise measure over AB, AC, BC
  double e_min;    // worst pair
  double e_tau;    // C^2_AB + C^2_AC + C^2_BC
  double c2_min;   // min squared pair concurrence
};

ResidualReport residual_report(const PureState& psi,
                               PairMeasure measure = PairMeasure::ConcurrenceSquared);

// Closed form of e_tau on the canonical five-parameter family:
//   4 K^2 c_d^2 s_d^2 [s_a^2 s_b^2 + s_a^2 s_g^2 + s_b^2 s_g^2 - 3 s_a^2 s_b^2 s_g^2].
double etau_from_ghz_params(const GhzCanonicalParams& p);

// The cube polynomial whose negativity bounds e_tau by 4/3:
//   f = 3(x^2+y^2+z^2) - 6(x^2y^2+x^2z^2+y^2z^2) + 5 x^2y^2z^2 - 4 + 8xyz,
// for x, y, z in [0, 1).
double appendix_c_f(double x, double y, double z);

struct GridSearchResult {
  double max_value;
  std::array<double, 3> argmax;
};

// Exhaustive search over the grid {i/resolution : 0 <= i < resolution}^3.
// Deterministic regardless of `workers`.
GridSearchResult grid_max_f(int resolution, int workers = 1);

// Reduced pair state of the symmetric one-excitation state on N parties:
//   (2 |Psi+><Psi+| + (N-2) |00><00|) / N,
// built analytically (no 2^N state involved).
DensityMatrix wn_pair_state(int parties);

// Pairwise concurrence 2/N of that state.
double wn_pair_concurrence(int parties);

// Parameter-counting lower bound for the number of continuous SLOCC
// parameters: 2(prod dims - 1) - 2 sum(dim_i^2 - 1), exact integers.
// A positive bound certifies infinitely many classes.
struct DimCount {
  std::vector<int> dims;
  long long state_params;
  long long group_params;
  long long lower_bound;
};

DimCount class_count_lower_bound(const std::vector<int>& dims);

}  // namespace slocc3

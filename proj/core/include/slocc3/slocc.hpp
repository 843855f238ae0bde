#pragma once

#include <array>
#include <optional>
#include <utility>

#include "slocc3/measures.hpp"
#include "slocc3/rng.hpp"
#include "slocc3/states.hpp"

namespace slocc3 {

// One operator per party. An operator counts as invertible when its
// determinant stays above 1e-10 after normalizing the largest entry to 1.
struct LocalOperatorTriple {
  std::vector<CMatrix> ops;
  std::vector<bool> invertible;

  static LocalOperatorTriple make(std::vector<CMatrix> ops);
  bool all_invertible() const;
};

// Applies the tensor product of the party operators; returns the
// normalized image and the squared norm of the unnormalized image (the
// branch weight). Throws Annihilated when the image norm falls below 1e-12.
std::pair<PureState, double> apply_local(const PureState& psi, const LocalOperatorTriple& t);

// Explicit operator triples carrying the canonical-form states:
// applied to ghz() (resp. w()) they produce state_from_ghz_params(p)
// (resp. state_from_w_params(q)).
LocalOperatorTriple ilo_for_ghz_class(const GhzCanonicalParams& p);
LocalOperatorTriple ilo_for_w_class(const WCanonicalParams& q);

// Schmidt decomposition of a bipartite pure state; coefficients are the
// squared singular values, truncated at eps_rank.
SchmidtDecomposition schmidt(const PureState& psi, double eps_rank = 1e-9);

// Single-copy conversion numbers for a two-qubit entangled state: the
// monotone E2 = lambda_2 and the optimal filtering success probability
// min(1, 2 lambda_2). Both are reported because they answer different
// questions; the CLI prints them side by side.
struct EprConversion {
  double e2;
  double probability;
};

EprConversion epr_conversion_probability(const PureState& psi, double eps_rank = 1e-9);

// Two-outcome POVM in singular-value form: A1 = U1 diag(a, b) V and
// A2 = U2 diag(sqrt(1-a^2), sqrt(1-b^2)) V, which satisfies
// A1^dag A1 + A2^dag A2 = 1 by construction.
class TwoOutcomePovm {
 public:
  // Validates a, b in (0, 1], unitarity of V/U1/U2, and the completeness
  // residual (IncompletePovm beyond 1e-10).
  static TwoOutcomePovm make(double a, double b, CMatrix v, CMatrix u1, CMatrix u2);

  // a, b uniform on (0.05, 0.95), unitaries Haar-sampled.
  static TwoOutcomePovm sample(Rng& rng);

  double a() const { return a_; }
  double b() const { return b_; }
  CMatrix element(int outcome) const;  // A1 or A2
  double completeness_residual() const;

 private:
  TwoOutcomePovm() = default;
  double a_ = 0.0, b_ = 0.0;
  CMatrix v_, u1_, u2_;
};

// Branch states and probabilities after measuring `povm` on `party`.
// A branch with probability below 1e-12 carries no state.
struct PovmOutcome {
  std::array<double, 2> probabilities;
  std::array<std::optional<PureState>, 2> states;
};

PovmOutcome apply_povm(const PureState& psi, const TwoOutcomePovm& povm, int party);

// One Monte-Carlo data point for the tangle-monotonicity claim:
//   average = p1 tau(phi1)^eta + p2 tau(phi2)^eta,  base = tau(psi)^eta.
// Callers assert average <= base + tolerance. tau^eta is extended
// continuously by 0 at tau = 0.
struct TangleTrial {
  double average;
  double base;
};

TangleTrial tangle_monotonicity_trial(const PureState& psi, const TwoOutcomePovm& povm,
                                      int party, double eta);

// Rank bookkeeping for a single-party operator: local ranks never increase,
// and stay fixed when the operator is invertible.
struct RankMonotonicityReport {
  std::array<int, 3> ranks_before;
  std::array<int, 3> ranks_after;
  bool op_invertible;
  bool non_increasing;
  bool ranks_equal;
};

RankMonotonicityReport verify_rank_monotonicity(const PureState& psi, const CMatrix& op,
                                                int party);

// Haar-ish unitary by Gram-Schmidt on a complex Gaussian matrix.
CMatrix random_unitary(int n, Rng& rng);

// Random invertible 2x2 operator (complex Gaussian entries, resampled while
// the normalized determinant stays below 0.05).
CMatrix random_invertible_2x2(Rng& rng);

}  // namespace slocc3

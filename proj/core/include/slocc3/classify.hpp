#pragma once

#include <array>
#include <optional>
#include <string>

#include "slocc3/measures.hpp"
#include "slocc3/states.hpp"

namespace slocc3 {

enum class SloccLabel { ProductABC, A_BC, B_AC, C_AB, W, GHZ };

const char* slocc_label_name(SloccLabel label) noexcept;  // "A-B-C", "A-BC", ...
std::optional<SloccLabel> slocc_label_from_name(const std::string& name) noexcept;

struct SloccClass {
  SloccLabel label;
  std::array<int, 3> local_ranks;
  int tensor_rank;  // 1 for A-B-C, 3 for W, 2 otherwise
};

struct Tolerances {
  double eps_rank = 1e-9;  // vanishing-determinant / rank threshold
  double eps_tau = 1e-10;  // GHZ vs W tangle threshold
  double eps_disc = 1e-9;  // single vs double root of the range quadratic
};

// Two-step identification: (1) which det(rho_kappa) vanish fixes the
// degenerate labels; (2) with all ranks maximal, tau > eps_tau picks GHZ
// over W. Throws Inconclusive when a determinant falls in the guard band
// (eps_rank, 10*eps_rank) where neither answer is safe.
SloccClass classify(const PureState& psi, const Tolerances& tol = {});

// Product vectors contained in the range of rho_BC. For states with
// maximal B/C ranks the range is a two-dimensional subspace holding either
// one or two product vectors: the roots of det(M1 + t M2) = 0 over the
// reshaped basis, with t = infinity admitted when det(M2) vanishes.
struct ProductVectorSet {
  int count = 0;                              // 1 or 2 distinct product vectors
  std::vector<std::vector<Complex>> vectors;  // unit 4-vectors in R(rho_BC)
  std::vector<Complex> finite_roots;
  bool root_at_infinity = false;
};

ProductVectorSet product_vectors_in_range(const PureState& psi, const Tolerances& tol = {});

GhzCanonicalParams ghz_canonical(const PureState& psi, const Tolerances& tol = {});
WCanonicalParams w_canonical(const PureState& psi, const Tolerances& tol = {});

// One term of a product decomposition; the overall coefficient is folded
// into the party-A factor, so the state is the plain sum of the terms.
struct ProductTerm {
  std::array<std::vector<Complex>, 3> factors;
};

struct TensorRankResult {
  int rank;                        // 1, 2, or 3
  std::vector<ProductTerm> terms;  // decomposition realizing `rank`
};

// Minimal number of product terms (SLOCC invariant), together with an
// explicit decomposition that reconstructs psi.
TensorRankResult tensor_rank(const PureState& psi, const Tolerances& tol = {});

// Plain amplitude sum of the terms (not renormalized), for comparing a
// decomposition against the state it came from.
std::vector<Complex> reconstruct(const std::vector<ProductTerm>& terms);

// Everything the `classify` CLI command reports for one state.
struct ClassificationReport {
  SloccClass cls;
  double tau = 0.0;
  std::optional<GhzCanonicalParams> ghz_params;
  std::optional<WCanonicalParams> w_params;
  // For the bipartite classes: Schmidt coefficients of the entangled pair.
  std::vector<double> schmidt_coefficients;
};

ClassificationReport classification_report(const PureState& psi, const Tolerances& tol = {});

}  // namespace slocc3

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc3/classify.hpp"
#include "slocc3/states.hpp"

namespace slocc3 {

// Random member of a SLOCC class, built from its canonical form with
// random parameters (kept away from degenerate corners) and dressed with
// random local unitaries; self-checked against the classifier before being
// returned. `label == nullopt` means a Haar-generic state.
PureState random_state_in_class(std::optional<SloccLabel> label, std::uint64_t seed,
                                const Tolerances& tol = {});

struct VerifyOptions {
  std::uint64_t seed = 1;
  int workers = 1;
  long trials = 10000;
  // tangle-monotone: fixed exponent, or cycle {0.25, 0.5, 1.0} when unset.
  std::optional<double> eta;
  int grid_resolution = 201;  // f-grid
  int wn_max = 10;            // wn: checks N = 3..wn_max
  Tolerances tol;
};

struct VerifyReport {
  std::string suite;
  long trials = 0;
  std::optional<double> eta;
  double max_violation = 0.0;
  std::uint64_t worst_seed = 0;
  long worst_index = -1;
  double tolerance = 0.0;
  bool pass = false;
  // Suite-specific numbers, reported in order.
  std::vector<std::pair<std::string, double>> extras;
};

// <tau^eta> <= tau^eta(psi) over random (state, POVM, party) triples.
VerifyReport verify_tangle_monotone(const VerifyOptions& opts);

// Local ranks never increase under single-party operators; invertible
// triples preserve ranks and the class label.
VerifyReport verify_rank_monotone(const VerifyOptions& opts);

// e_tau <= 4/3 and min pair C^2 <= 4/9 over Haar states; also reports the
// sampled maximum of the mean formation measure (an experiment, not a
// pass/fail criterion).
VerifyReport verify_etau_bound(const VerifyOptions& opts);

// Grid negativity of the cube polynomial.
VerifyReport verify_f_grid(const VerifyOptions& opts);

// Pair concurrences of the symmetric one-excitation states: analytic pair
// state vs the full reduce route, and the 4/N^2 average.
VerifyReport verify_wn(const VerifyOptions& opts);

// Dispatch by suite name: tangle-monotone, rank-monotone, etau-bound,
// f-grid, wn. Throws UnknownSuite otherwise.
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace slocc3

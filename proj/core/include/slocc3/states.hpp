#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slocc3/linalg.hpp"

namespace slocc3 {

// Normalized pure state of a finite-dimensional multi-party system.
//
// Flat amplitude indexing is mixed-radix with party A (index 0) most
// significant: for qubit triples, |q_A q_B q_C> sits at 4*q_A + 2*q_B + q_C.
// This matches the ket ordering |q_A>|q_B>|q_C> and is the convention used
// by the JSON state file format.
class PureState {
 public:
  // Validates shape, then renormalizes. Throws DimensionMismatch if the
  // amplitude count does not equal the product of dims, NotNormalizable if
  // the input norm is below 1e-12.
  PureState(std::vector<int> dims, std::vector<Complex> amplitudes);

  const std::vector<int>& dims() const { return dims_; }
  int num_parties() const { return static_cast<int>(dims_.size()); }
  int total_dim() const { return static_cast<int>(amps_.size()); }

  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(int flat) const { return amps_[static_cast<std::size_t>(flat)]; }

  int flat_index(std::span<const int> digits) const;
  std::vector<int> digits(int flat) const;

 private:
  std::vector<int> dims_;
  std::vector<Complex> amps_;
};

PureState from_amplitudes(std::vector<int> dims, std::vector<Complex> amplitudes);

// Named states.
PureState ghz();            // (|000> + |111>)/sqrt(2)
PureState w();              // (|001> + |010> + |100>)/sqrt(3)
PureState w_n(int parties); // symmetric one-excitation state; parties >= 3
PureState epr();            // (|00> + |11>)/sqrt(2)
PureState basis_state(std::vector<int> dims, int index);

// Five-parameter canonical coordinates of the generic (GHZ-class) form
//   sqrt(K) (c_delta |000> + s_delta e^{i phi} |phi_A>|phi_B>|phi_C>),
// with |phi_X> = cos(x)|0> + sin(x)|1>. Ranges:
//   delta in (0, pi/4], alpha/beta/gamma in (0, pi/2], phi in [0, 2 pi),
// and K = 1 / (1 + 2 c_d s_d c_a c_b c_g cos(phi)).
struct GhzCanonicalParams {
  double K;
  double delta;
  double alpha;
  double beta;
  double gamma;
  double phi;

  // Computes K from the angles.
  static GhzCanonicalParams from_angles(double delta, double alpha, double beta,
                                        double gamma, double phi);
  // Throws BadRange if any field is outside its interval or K is
  // inconsistent with the angles beyond 1e-10.
  void validate() const;
};

// Three-parameter canonical coordinates of the W-class form
//   sqrt(a)|001> + sqrt(b)|010> + sqrt(c)|100> + sqrt(d)|000>,
// a, b, c > 0 and d = 1 - (a + b + c) >= 0.
struct WCanonicalParams {
  double a;
  double b;
  double c;
  double d;

  static WCanonicalParams from_abc(double a, double b, double c);
  void validate() const;
};

PureState state_from_ghz_params(const GhzCanonicalParams& p);
PureState state_from_w_params(const WCanonicalParams& p);

// Haar-distributed state from normalized independent complex Gaussians.
// Deterministic per seed; see rng.hpp for the frozen generator contract.
PureState random_pure(const std::vector<int>& dims, std::uint64_t seed);

Complex inner_product(const PureState& a, const PureState& b);
PureState permute_parties(const PureState& psi, std::span<const int> perm);
PureState tensor(const PureState& a, const PureState& b);

// Ray equality: true when a and b agree up to a global phase within tol
// (in l2 distance after aligning the phase of the largest amplitude).
bool approx_equal_up_to_phase(const PureState& a, const PureState& b, double tol);

// Schmidt data of a bipartite pure state. Coefficients are the squared
// singular values (they sum to 1), sorted descending, truncated at
// eps_rank; bases hold the matching orthonormal vectors as columns.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  CMatrix left;
  CMatrix right;
  int schmidt_number;
};

}  // namespace slocc3

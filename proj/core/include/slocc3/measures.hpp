#pragma once

#include <span>

#include "slocc3/states.hpp"

namespace slocc3 {

// Hermitian, unit-trace, PSD matrix arising as a reduction of a pure state.
class DensityMatrix {
 public:
  // Validates Hermiticity and trace within tol and that the spectrum is
  // >= -1e-10.
  static DensityMatrix make(CMatrix m, double tol = 1e-10);

  int dim() const { return mat_.rows(); }
  const CMatrix& matrix() const { return mat_; }
  std::vector<double> eigenvalues() const;

 private:
  explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {}
  CMatrix mat_;
};

// Partial trace over the complement of `keep` (party indices, strictly
// increasing order of the kept parties is preserved).
DensityMatrix reduce(const PureState& psi, std::span<const int> keep);

// Von Neumann entropy in bits.
double local_entropy(const DensityMatrix& rho);

// Number of eigenvalues above eps_rank * (largest eigenvalue).
int local_rank(const DensityMatrix& rho, double eps_rank = 1e-9);

// Wootters concurrence of a two-qubit density matrix, computed through the
// Hermitian similarity sqrt(rho) * rho_tilde * sqrt(rho) (same spectrum as
// rho * rho_tilde, but solvable with the Hermitian Jacobi kernel).
double concurrence_mixed(const DensityMatrix& rho);

// det of the reduced single-qubit state of `party`, evaluated as a
// Cauchy-Binet sum of squared 2x2 minors of the amplitude matrix. The sum
// has no cancellation, so near rank-deficiency it keeps full relative
// accuracy where rho00*rho11 - |rho01|^2 would lose everything.
double det_reduced(const PureState& psi, int party);

// 2 sqrt(det rho_party), clamped to [0, 1].
double cut_concurrence(const PureState& psi, int party);

// 3-tangle from the A-focused combination
//   tau = C^2_{A(BC)} - C^2_{AB} - C^2_{AC},
// clamped to [0, 1]; permutation invariance is a tested property.
double three_tangle(const PureState& psi);

// Entanglement of formation / E_2 as functions of the concurrence.
double ent_formation(double concurrence);
double e2_monotone(double concurrence);

double binary_entropy(double x);

struct MeasureReport {
  double s_a, s_b, s_c;
  int rank_a, rank_b, rank_c;
  double c_ab, c_ac, c_bc;
  double c_a_bc, c_b_ac, c_c_ab;
  double tau;
  double e_tau;
};

MeasureReport measure_report(const PureState& psi);

}  // namespace slocc3

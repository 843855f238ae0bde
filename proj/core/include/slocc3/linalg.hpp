#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "slocc3/error.hpp"

namespace slocc3 {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Everything in this toolkit lives in
// dimension <= 8, so no attempt is made at blocking or sparsity.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return a_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  bool is_square() const { return rows_ == cols_; }
  // Relative Hermiticity check: ||M - M^dag|| <= tol * ||M||.
  bool is_hermitian(double tol) const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scalar);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(Complex scalar, CMatrix m);

std::vector<Complex> operator*(const CMatrix& m, const std::vector<Complex>& v);

// Kronecker product; dims multiply.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Determinant by LU with partial pivoting (intended for dim <= 8).
Complex det(const CMatrix& m);

struct HermitianEig {
  std::vector<double> eigenvalues;  // sorted descending
  CMatrix eigenvectors;             // orthonormal columns, same order
};

struct JacobiOptions {
  int max_sweeps = 100;
  double offdiag_tol = 1e-14;    // relative to ||M||_F
  double hermiticity_tol = 1e-10;
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws NonHermitian if the symmetry check fails and
// NoConvergence if the sweep cap is exceeded.
HermitianEig eig_hermitian(const CMatrix& m, const JacobiOptions& opts = {});

// Hermitian PSD square root. Eigenvalues below -psd_tol raise NotPsd;
// eigenvalues in [-psd_tol, ~0] are clamped to exactly zero so that
// rank-deficient inputs keep an exactly rank-deficient root (this is what
// makes the concurrence pipeline accurate near zero eigenvalues).
CMatrix psd_sqrt(const CMatrix& m, double psd_tol = 1e-12);

}  // namespace slocc3

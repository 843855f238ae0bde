#include "slocc3/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slocc3 {

namespace {

constexpr int kMaxEigDim = 8;

// Eigenvalues of rank-deficient matrices come out of Jacobi as tiny values
// of either sign; anything below this (relative to the largest eigenvalue)
// is treated as an exact zero by psd_sqrt.
constexpr double kSqrtFloorRel = 1e-14;

}  // namespace

CMatrix::CMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) fail(Errc::BadDimension, "negative matrix dimension");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      fail(Errc::DimensionMismatch, "ragged initializer for CMatrix");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMatrix CMatrix::conjugate() const {
  CMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

Complex CMatrix::trace() const {
  if (!is_square()) fail(Errc::BadDimension, "trace of non-square matrix");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double s = 0.0;
  for (const Complex& z : a_) s = std::max(s, std::abs(z));
  return s;
}

bool CMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  double diff = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) diff += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(diff) <= tol * std::max(frobenius_norm(), 1e-300);
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(Errc::DimensionMismatch, "matrix addition shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(Errc::DimensionMismatch, "matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (Complex& z : a_) z *= scalar;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(Complex scalar, CMatrix m) { return m *= scalar; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  CMatrix r(lhs.rows(), rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i)
    for (int k = 0; k < lhs.cols(); ++k) {
      const Complex v = lhs(i, k);
      if (v == Complex{}) continue;
      for (int j = 0; j < rhs.cols(); ++j) r(i, j) += v * rhs(k, j);
    }
  return r;
}

std::vector<Complex> operator*(const CMatrix& m, const std::vector<Complex>& v) {
  if (m.cols() != static_cast<int>(v.size()))
    fail(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Complex> r(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Complex v = a(ia, ja);
      if (v == Complex{}) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
    }
  return r;
}

Complex det(const CMatrix& m) {
  if (!m.is_square()) fail(Errc::BadDimension, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  CMatrix lu = m;
  Complex result = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      result = -result;
    }
    result *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (int c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return result;
}

namespace {

double offdiag_norm(const CMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEig eig_hermitian(const CMatrix& input, const JacobiOptions& opts) {
  if (!input.is_square()) fail(Errc::BadDimension, "eig_hermitian needs a square matrix");
  const int n = input.rows();
  if (n > kMaxEigDim) fail(Errc::BadDimension, "eig_hermitian supports dim <= 8");
  if (!input.is_hermitian(opts.hermiticity_tol))
    fail(Errc::NonHermitian, "matrix fails the Hermiticity check");

  CMatrix m = input;
  // Symmetrize exactly so round-off in the input cannot bias the sweeps.
  for (int i = 0; i < n; ++i) {
    m(i, i) = Complex(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }

  CMatrix v = CMatrix::identity(n);
  const double scale = m.frobenius_norm();
  const double threshold = opts.offdiag_tol * scale;

  int sweep = 0;
  while (offdiag_norm(m) > threshold) {
    if (++sweep > opts.max_sweeps)
      fail(Errc::NoConvergence, "Jacobi sweep cap exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = m(p, q);
        const double babs = std::abs(b);
        if (babs <= 1e-300) continue;
        // Phase twist makes the (p,q) block real symmetric, then a classic
        // Jacobi rotation annihilates it. Combined unitary: R = P(q, e^{-i arg b}) * G.
        const Complex phase = b / babs;  // e^{i arg b}
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double theta = (aqq - app) / (2.0 * babs);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Column twist: col_q *= conj(phase); then rotate columns p,q of m and v,
        // and the matching rows of m (adjoint action).
        for (int k = 0; k < n; ++k) {
          const Complex mkp = m(k, p);
          const Complex mkq = m(k, q) * std::conj(phase);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q) * std::conj(phase);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex mpk = m(p, k);
          const Complex mqk = m(q, k) * phase;
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = Complex(m(p, p).real(), 0.0);
        m(q, q) = Complex(m(q, q).real(), 0.0);
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return m(a, a).real() > m(b, b).real(); });

  HermitianEig out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[static_cast<std::size_t>(j)] = m(order[static_cast<std::size_t>(j)],
                                                     order[static_cast<std::size_t>(j)]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
  }
  return out;
}

CMatrix psd_sqrt(const CMatrix& m, double psd_tol) {
  HermitianEig eig = eig_hermitian(m);
  const int n = m.rows();
  const double largest = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
  std::vector<double> roots(eig.eigenvalues.size());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -psd_tol)
      fail(Errc::NotPsd, "eigenvalue below -tolerance in psd_sqrt");
    roots[i] = lambda > kSqrtFloorRel * largest ? std::sqrt(lambda) : 0.0;
  }
  CMatrix r(n, n);
  const CMatrix& v = eig.eigenvectors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        s += v(i, k) * roots[static_cast<std::size_t>(k)] * std::conj(v(j, k));
      r(i, j) = s;
    }
  return r;
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotPsd: return "NotPsd";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotNormalizable: return "NotNormalizable";
    case Errc::BadPartyCount: return "BadPartyCount";
    case Errc::BadRange: return "BadRange";
    case Errc::BadSubset: return "BadSubset";
    case Errc::BadDimension: return "BadDimension";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotGhzClass: return "NotGhzClass";
    case Errc::NotWClass: return "NotWClass";
    case Errc::DegenerateRange: return "DegenerateRange";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Annihilated: return "Annihilated";
    case Errc::NotEntangled: return "NotEntangled";
    case Errc::IncompletePovm: return "IncompletePovm";
    case Errc::BadDims: return "BadDims";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "UnknownError";
}

}  // namespace slocc3

#include "slocc3/slocc.hpp"

#include <algorithm>
#include <cmath>

namespace slocc3 {

namespace {

constexpr double kAnnihilationTol = 1e-12;
constexpr double kInvertibilityTol = 1e-10;
constexpr double kCompletenessTol = 1e-10;

// Applies a single-party operator in place over the flat amplitude array.
std::vector<Complex> apply_one_party(const std::vector<Complex>& amps,
                                     const std::vector<int>& dims, int party,
                                     const CMatrix& op) {
  const int d = dims[static_cast<std::size_t>(party)];
  if (op.rows() != d || op.cols() != d)
    fail(Errc::DimensionMismatch, "operator does not match party dimension");

  int stride = 1;
  for (std::size_t p = dims.size(); p-- > static_cast<std::size_t>(party) + 1;)
    stride *= dims[p];
  const int block = stride * d;

  std::vector<Complex> out(amps.size());
  const int total = static_cast<int>(amps.size());
  for (int base = 0; base < total; base += block) {
    for (int inner = 0; inner < stride; ++inner) {
      for (int i = 0; i < d; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < d; ++j)
          s += op(i, j) * amps[static_cast<std::size_t>(base + j * stride + inner)];
        out[static_cast<std::size_t>(base + i * stride + inner)] = s;
      }
    }
  }
  return out;
}

bool op_invertible(const CMatrix& op) {
  const double scale = op.max_abs();
  if (scale <= 0.0) return false;
  CMatrix scaled = op;
  scaled *= Complex(1.0 / scale, 0.0);
  return std::abs(det(scaled)) > kInvertibilityTol;
}

}  // namespace

LocalOperatorTriple LocalOperatorTriple::make(std::vector<CMatrix> ops) {
  LocalOperatorTriple t;
  t.invertible.reserve(ops.size());
  for (const CMatrix& op : ops) {
    if (!op.is_square()) fail(Errc::BadDimension, "local operators must be square");
    t.invertible.push_back(op_invertible(op));
  }
  t.ops = std::move(ops);
  return t;
}

bool LocalOperatorTriple::all_invertible() const {
  return std::all_of(invertible.begin(), invertible.end(), [](bool b) { return b; });
}

std::pair<PureState, double> apply_local(const PureState& psi, const LocalOperatorTriple& t) {
  if (t.ops.size() != static_cast<std::size_t>(psi.num_parties()))
    fail(Errc::DimensionMismatch, "one operator per party required");
  std::vector<Complex> amps = psi.amplitudes();
  for (int p = 0; p < psi.num_parties(); ++p)
    amps = apply_one_party(amps, psi.dims(), p, t.ops[static_cast<std::size_t>(p)]);
  double weight = 0.0;
  for (const Complex& z : amps) weight += std::norm(z);
  if (std::sqrt(weight) < kAnnihilationTol)
    fail(Errc::Annihilated, "local operator annihilated the state");
  return {PureState(psi.dims(), std::move(amps)), weight};
}

LocalOperatorTriple ilo_for_ghz_class(const GhzCanonicalParams& p) {
  p.validate();
  const double cd = std::cos(p.delta), sd = std::sin(p.delta);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  const Complex eip = std::polar(1.0, p.phi);
  const double f = std::sqrt(2.0 * p.K);

  CMatrix op_a{{f * cd, f * sd * ca * eip}, {0.0, f * sd * sa * eip}};
  CMatrix op_b{{1.0, cb}, {0.0, sb}};
  CMatrix op_c{{1.0, cg}, {0.0, sg}};
  return LocalOperatorTriple::make({std::move(op_a), std::move(op_b), std::move(op_c)});
}

LocalOperatorTriple ilo_for_w_class(const WCanonicalParams& q) {
  q.validate();
  const double ra = std::sqrt(q.a), rb = std::sqrt(q.b), rc = std::sqrt(q.c);
  const double rd = std::sqrt(q.d);
  CMatrix op_a{{ra, rd}, {0.0, rc}};
  CMatrix op_b{{std::sqrt(3.0), 0.0}, {0.0, std::sqrt(3.0) * rb / ra}};
  return LocalOperatorTriple::make({std::move(op_a), std::move(op_b), CMatrix::identity(2)});
}

SchmidtDecomposition schmidt(const PureState& psi, double eps_rank) {
  if (psi.num_parties() != 2) fail(Errc::BadPartyCount, "schmidt expects a bipartite state");
  const int n = psi.dims()[0];
  const int m = psi.dims()[1];

  CMatrix mat(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) mat(i, j) = psi.amplitude(i * m + j);

  // Eigendecompose on the smaller side; the Jacobi kernel is capped at 8.
  const bool left_side = n <= m;
  const CMatrix gram = left_side ? mat * mat.adjoint() : mat.adjoint() * mat;
  const HermitianEig eig = eig_hermitian(gram);

  const int small_dim = left_side ? n : m;
  const int other_dim = left_side ? m : n;

  SchmidtDecomposition out;
  int count = 0;
  for (int k = 0; k < small_dim; ++k)
    if (eig.eigenvalues[static_cast<std::size_t>(k)] > eps_rank) ++count;
  if (count == 0) fail(Errc::DegenerateRange, "state has no Schmidt weight above threshold");

  out.coefficients.resize(static_cast<std::size_t>(count));
  out.schmidt_number = count;
  CMatrix small_basis(small_dim, count), other_basis(other_dim, count);
  for (int k = 0; k < count; ++k) {
    const double lambda = eig.eigenvalues[static_cast<std::size_t>(k)];
    out.coefficients[static_cast<std::size_t>(k)] = lambda;
    const double sigma = std::sqrt(lambda);
    for (int i = 0; i < small_dim; ++i) small_basis(i, k) = eig.eigenvectors(i, k);
    // Partner vector: M^T conj(u) / sigma (or M conj(u) / sigma when the
    // gram side is the column space).
    for (int i = 0; i < other_dim; ++i) {
      Complex s = 0.0;
      for (int j = 0; j < small_dim; ++j) {
        const Complex mji = left_side ? mat(j, i) : mat(i, j);
        s += mji * std::conj(eig.eigenvectors(j, k));
      }
      other_basis(i, k) = s / sigma;
    }
  }
  out.left = left_side ? small_basis : other_basis;
  out.right = left_side ? other_basis : small_basis;
  return out;
}

EprConversion epr_conversion_probability(const PureState& psi, double eps_rank) {
  if (psi.dims() != std::vector<int>{2, 2})
    fail(Errc::BadPartyCount, "epr_conversion_probability expects a two-qubit state");
  const SchmidtDecomposition sd = schmidt(psi, eps_rank);
  if (sd.schmidt_number < 2) fail(Errc::NotEntangled, "state has Schmidt number 1");
  const double lambda2 = sd.coefficients[1];
  return {lambda2, std::min(1.0, 2.0 * lambda2)};
}

TwoOutcomePovm TwoOutcomePovm::make(double a, double b, CMatrix v, CMatrix u1, CMatrix u2) {
  if (!(a > 0.0) || a > 1.0 || !(b > 0.0) || b > 1.0)
    fail(Errc::BadRange, "POVM parameters a, b must lie in (0, 1]");
  for (const CMatrix* u : {&v, &u1, &u2}) {
    if (u->rows() != 2 || u->cols() != 2) fail(Errc::BadDimension, "POVM unitaries must be 2x2");
    const CMatrix residual = (*u) * u->adjoint() - CMatrix::identity(2);
    if (residual.frobenius_norm() > 1e-10) fail(Errc::IncompletePovm, "POVM factor not unitary");
  }
  TwoOutcomePovm p;
  p.a_ = a;
  p.b_ = b;
  p.v_ = std::move(v);
  p.u1_ = std::move(u1);
  p.u2_ = std::move(u2);
  if (p.completeness_residual() > kCompletenessTol)
    fail(Errc::IncompletePovm, "POVM completeness residual too large");
  return p;
}

TwoOutcomePovm TwoOutcomePovm::sample(Rng& rng) {
  const double a = rng.uniform(0.05, 0.95);
  const double b = rng.uniform(0.05, 0.95);
  return make(a, b, random_unitary(2, rng), random_unitary(2, rng), random_unitary(2, rng));
}

CMatrix TwoOutcomePovm::element(int outcome) const {
  CMatrix diag(2, 2);
  if (outcome == 0) {
    diag(0, 0) = a_;
    diag(1, 1) = b_;
    return u1_ * diag * v_;
  }
  diag(0, 0) = std::sqrt(1.0 - a_ * a_);
  diag(1, 1) = std::sqrt(1.0 - b_ * b_);
  return u2_ * diag * v_;
}

double TwoOutcomePovm::completeness_residual() const {
  const CMatrix a1 = element(0);
  const CMatrix a2 = element(1);
  const CMatrix sum = a1.adjoint() * a1 + a2.adjoint() * a2 - CMatrix::identity(2);
  return sum.frobenius_norm();
}

PovmOutcome apply_povm(const PureState& psi, const TwoOutcomePovm& povm, int party) {
  if (party < 0 || party >= psi.num_parties()) fail(Errc::OutOfRange, "party index out of range");
  if (povm.completeness_residual() > kCompletenessTol)
    fail(Errc::IncompletePovm, "POVM completeness residual too large");

  PovmOutcome out{};
  for (int i = 0; i < 2; ++i) {
    std::vector<Complex> branch =
        apply_one_party(psi.amplitudes(), psi.dims(), party, povm.element(i));
    double p = 0.0;
    for (const Complex& z : branch) p += std::norm(z);
    out.probabilities[static_cast<std::size_t>(i)] = p;
    if (p >= kAnnihilationTol)
      out.states[static_cast<std::size_t>(i)] = PureState(psi.dims(), std::move(branch));
  }
  return out;
}

TangleTrial tangle_monotonicity_trial(const PureState& psi, const TwoOutcomePovm& povm,
                                      int party, double eta) {
  if (!(eta > 0.0) || eta > 1.0) fail(Errc::OutOfRange, "eta must lie in (0, 1]");
  const PovmOutcome outcome = apply_povm(psi, povm, party);

  // tau^eta extended by 0 at tau = 0 (pow(0, eta) is already 0 for eta > 0,
  // and tau is clamped non-negative upstream).
  const auto tau_pow = [eta](double tau) { return tau > 0.0 ? std::pow(tau, eta) : 0.0; };

  double average = 0.0;
  for (int i = 0; i < 2; ++i)
    if (outcome.states[static_cast<std::size_t>(i)])
      average += outcome.probabilities[static_cast<std::size_t>(i)] *
                 tau_pow(three_tangle(*outcome.states[static_cast<std::size_t>(i)]));
  return {average, tau_pow(three_tangle(psi))};
}

RankMonotonicityReport verify_rank_monotonicity(const PureState& psi, const CMatrix& op,
                                                int party) {
  if (psi.num_parties() != 3) fail(Errc::BadPartyCount, "rank check expects three parties");
  std::vector<CMatrix> ops;
  for (int p = 0; p < 3; ++p)
    ops.push_back(p == party ? op : CMatrix::identity(psi.dims()[static_cast<std::size_t>(p)]));
  const LocalOperatorTriple triple = LocalOperatorTriple::make(std::move(ops));
  const PureState image = apply_local(psi, triple).first;

  RankMonotonicityReport rep{};
  rep.op_invertible = triple.invertible[static_cast<std::size_t>(party)];
  for (int p = 0; p < 3; ++p) {
    const std::array<int, 1> keep = {p};
    rep.ranks_before[static_cast<std::size_t>(p)] = local_rank(reduce(psi, keep));
    rep.ranks_after[static_cast<std::size_t>(p)] = local_rank(reduce(image, keep));
  }
  rep.non_increasing = true;
  rep.ranks_equal = true;
  for (int p = 0; p < 3; ++p) {
    if (rep.ranks_after[static_cast<std::size_t>(p)] > rep.ranks_before[static_cast<std::size_t>(p)])
      rep.non_increasing = false;
    if (rep.ranks_after[static_cast<std::size_t>(p)] != rep.ranks_before[static_cast<std::size_t>(p)])
      rep.ranks_equal = false;
  }
  return rep;
}

CMatrix random_unitary(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  // Gram-Schmidt columns.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex overlap = 0.0;
      for (int i = 0; i < n; ++i) overlap += std::conj(g(i, k)) * g(i, j);
      for (int i = 0; i < n; ++i) g(i, j) -= overlap * g(i, k);
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12) return random_unitary(n, rng);  // resample a degenerate draw
    for (int i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return g;
}

CMatrix random_invertible_2x2(Rng& rng) {
  for (;;) {
    CMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = rng.complex_gaussian();
    const double scale = m.max_abs();
    if (scale <= 0.0) continue;
    CMatrix scaled = m;
    scaled *= Complex(1.0 / scale, 0.0);
    if (std::abs(det(scaled)) > 0.05) return m;
  }
}

}  // namespace slocc3

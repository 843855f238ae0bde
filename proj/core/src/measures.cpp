#include "slocc3/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace slocc3 {

namespace {

// Eigenvalues of sqrt(rho) rho_tilde sqrt(rho) below this fraction of the
// largest one are rank-deficiency noise; treating them as exact zeros keeps
// sqrt() from amplifying O(eps) round-off into O(sqrt(eps)) concurrence
// error.
constexpr double kMuFloorRel = 1e-12;

constexpr double kTauClamp = 1e-9;

}  // namespace

DensityMatrix DensityMatrix::make(CMatrix m, double tol) {
  if (!m.is_square()) fail(Errc::BadDimension, "density matrix must be square");
  if (!m.is_hermitian(tol)) fail(Errc::NonHermitian, "density matrix fails Hermiticity check");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol) fail(Errc::NotNormalizable, "density matrix trace != 1");
  DensityMatrix rho(std::move(m));
  for (double lambda : rho.eigenvalues())
    if (lambda < -1e-10) fail(Errc::NotPsd, "density matrix has a negative eigenvalue");
  return rho;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  return eig_hermitian(mat_).eigenvalues;
}

DensityMatrix reduce(const PureState& psi, std::span<const int> keep) {
  const int parties = psi.num_parties();
  if (keep.empty() || static_cast<int>(keep.size()) >= parties)
    fail(Errc::BadSubset, "keep must be a nonempty proper subset of parties");
  std::vector<bool> kept(static_cast<std::size_t>(parties), false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int p = keep[i];
    if (p < 0 || p >= parties || kept[static_cast<std::size_t>(p)])
      fail(Errc::BadSubset, "invalid party subset");
    if (i > 0 && keep[i] <= keep[i - 1]) fail(Errc::BadSubset, "keep must be strictly increasing");
    kept[static_cast<std::size_t>(p)] = true;
  }

  int keep_dim = 1, trace_dim = 1;
  for (int p = 0; p < parties; ++p)
    (kept[static_cast<std::size_t>(p)] ? keep_dim : trace_dim) *= psi.dims()[static_cast<std::size_t>(p)];

  // Row index for each flat amplitude index: mixed-radix over kept parties
  // (original order), and the same over traced parties.
  const int total = psi.total_dim();
  std::vector<int> row_of(static_cast<std::size_t>(total)), env_of(static_cast<std::size_t>(total));
  for (int flat = 0; flat < total; ++flat) {
    const std::vector<int> d = psi.digits(flat);
    int row = 0, env = 0;
    for (int p = 0; p < parties; ++p) {
      if (kept[static_cast<std::size_t>(p)])
        row = row * psi.dims()[static_cast<std::size_t>(p)] + d[static_cast<std::size_t>(p)];
      else
        env = env * psi.dims()[static_cast<std::size_t>(p)] + d[static_cast<std::size_t>(p)];
    }
    row_of[static_cast<std::size_t>(flat)] = row;
    env_of[static_cast<std::size_t>(flat)] = env;
  }

  // rho[i][j] = sum_env M[i][env] conj(M[j][env]) with M the keep x trace reshape.
  CMatrix reshaped(keep_dim, trace_dim);
  for (int flat = 0; flat < total; ++flat)
    reshaped(row_of[static_cast<std::size_t>(flat)], env_of[static_cast<std::size_t>(flat)]) =
        psi.amplitude(flat);
  CMatrix rho(keep_dim, keep_dim);
  for (int i = 0; i < keep_dim; ++i)
    for (int j = 0; j < keep_dim; ++j) {
      Complex s = 0.0;
      for (int e = 0; e < trace_dim; ++e) s += reshaped(i, e) * std::conj(reshaped(j, e));
      rho(i, j) = s;
    }
  return DensityMatrix::make(std::move(rho));
}

double local_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda > 1e-300) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

int local_rank(const DensityMatrix& rho, double eps_rank) {
  if (!(eps_rank > 0.0)) fail(Errc::OutOfRange, "eps_rank must be positive");
  const std::vector<double> ev = rho.eigenvalues();
  const double largest = ev.empty() ? 0.0 : std::max(ev.front(), 0.0);
  int rank = 0;
  for (double lambda : ev)
    if (lambda > eps_rank * largest) ++rank;
  return rank;
}

double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.dim() != 4) fail(Errc::BadDimension, "concurrence_mixed needs a two-qubit state");
  // rho_tilde = (sy (x) sy) rho* (sy (x) sy); in the computational basis the
  // spin flip maps |jk> -> (-1)^{j+k} |(1-j)(1-k)>, i.e. index i -> 3 - i
  // with sign +1 for i in {0,3} and -1 for i in {1,2}.
  static constexpr std::array<double, 4> sign = {1.0, -1.0, -1.0, 1.0};
  CMatrix tilde(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      tilde(i, j) = sign[static_cast<std::size_t>(i)] * sign[static_cast<std::size_t>(j)] *
                    std::conj(rho.matrix()(3 - i, 3 - j));

  const CMatrix root = psd_sqrt(rho.matrix());
  const CMatrix h = root * tilde * root;
  const std::vector<double> mu = eig_hermitian(h).eigenvalues;
  const double mu_max = std::max(mu.front(), 0.0);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    const double m = mu[static_cast<std::size_t>(i)];
    lambda[static_cast<std::size_t>(i)] = m > kMuFloorRel * mu_max ? std::sqrt(m) : 0.0;
  }
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

double det_reduced(const PureState& psi, int party) {
  if (psi.num_parties() != 3 || psi.dims() != std::vector<int>{2, 2, 2})
    fail(Errc::BadPartyCount, "det_reduced expects a three-qubit state");
  if (party < 0 || party > 2) fail(Errc::OutOfRange, "party index out of range");

  // 2 x 4 reshape with `party` as the row index.
  Complex m[2][4] = {};
  for (int flat = 0; flat < 8; ++flat) {
    const std::vector<int> d = psi.digits(flat);
    int c = 0;
    for (int p = 0; p < 3; ++p)
      if (p != party) c = c * 2 + d[static_cast<std::size_t>(p)];
    m[d[static_cast<std::size_t>(party)]][c] = psi.amplitude(flat);
  }

  double s = 0.0;
  for (int c1 = 0; c1 < 4; ++c1)
    for (int c2 = c1 + 1; c2 < 4; ++c2)
      s += std::norm(m[0][c1] * m[1][c2] - m[0][c2] * m[1][c1]);
  return s;
}

double cut_concurrence(const PureState& psi, int party) {
  const double d = std::max(det_reduced(psi, party), 0.0);
  return std::clamp(2.0 * std::sqrt(d), 0.0, 1.0);
}

namespace {

double pair_concurrence(const PureState& psi, int p1, int p2) {
  const std::array<int, 2> keep = {p1, p2};
  return concurrence_mixed(reduce(psi, keep));
}

double tangle_focus_a(const PureState& psi) {
  const double c2_cut = 4.0 * std::max(det_reduced(psi, 0), 0.0);
  const double cab = pair_concurrence(psi, 0, 1);
  const double cac = pair_concurrence(psi, 0, 2);
  double tau = c2_cut - cab * cab - cac * cac;
  if (tau < 0.0 && tau > -kTauClamp) tau = 0.0;
  return std::clamp(tau, 0.0, 1.0);
}

}  // namespace

double three_tangle(const PureState& psi) {
  if (psi.num_parties() != 3 || psi.dims() != std::vector<int>{2, 2, 2})
    fail(Errc::BadPartyCount, "three_tangle expects a three-qubit state");
  return tangle_focus_a(psi);
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) fail(Errc::OutOfRange, "binary entropy argument outside [0, 1]");
  double s = 0.0;
  if (x > 1e-300) s -= x * std::log2(x);
  if (1.0 - x > 1e-300) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

double ent_formation(double concurrence) {
  if (concurrence < 0.0 || concurrence > 1.0)
    fail(Errc::OutOfRange, "concurrence outside [0, 1]");
  const double root = std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence));
  return binary_entropy(0.5 + 0.5 * root);
}

double e2_monotone(double concurrence) {
  if (concurrence < 0.0 || concurrence > 1.0)
    fail(Errc::OutOfRange, "concurrence outside [0, 1]");
  return 0.5 - 0.5 * std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence));
}

MeasureReport measure_report(const PureState& psi) {
  if (psi.num_parties() != 3 || psi.dims() != std::vector<int>{2, 2, 2})
    fail(Errc::BadPartyCount, "measure_report expects a three-qubit state");

  MeasureReport r{};
  const std::array<int, 1> ka = {0}, kb = {1}, kc = {2};
  const DensityMatrix rho_a = reduce(psi, ka);
  const DensityMatrix rho_b = reduce(psi, kb);
  const DensityMatrix rho_c = reduce(psi, kc);
  r.s_a = local_entropy(rho_a);
  r.s_b = local_entropy(rho_b);
  r.s_c = local_entropy(rho_c);
  r.rank_a = local_rank(rho_a);
  r.rank_b = local_rank(rho_b);
  r.rank_c = local_rank(rho_c);
  r.c_ab = pair_concurrence(psi, 0, 1);
  r.c_ac = pair_concurrence(psi, 0, 2);
  r.c_bc = pair_concurrence(psi, 1, 2);
  r.c_a_bc = cut_concurrence(psi, 0);
  r.c_b_ac = cut_concurrence(psi, 1);
  r.c_c_ab = cut_concurrence(psi, 2);
  r.tau = three_tangle(psi);
  r.e_tau = r.c_ab * r.c_ab + r.c_ac * r.c_ac + r.c_bc * r.c_bc;
  return r;
}

}  // namespace slocc3

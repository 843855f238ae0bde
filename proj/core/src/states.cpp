#include "slocc3/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slocc3/rng.hpp"

namespace slocc3 {

namespace {

constexpr double kMinNorm = 1e-12;
constexpr double kPi = std::numbers::pi;

long long checked_total_dim(const std::vector<int>& dims) {
  if (dims.empty()) fail(Errc::BadPartyCount, "state needs at least one party");
  long long total = 1;
  for (int d : dims) {
    if (d < 2) fail(Errc::BadDimension, "party dimension must be >= 2");
    total *= d;
    if (total > (1LL << 30)) fail(Errc::BadDimension, "state dimension too large");
  }
  return total;
}

}  // namespace

PureState::PureState(std::vector<int> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  const long long total = checked_total_dim(dims_);
  if (total != static_cast<long long>(amps_.size()))
    fail(Errc::DimensionMismatch, "amplitude count does not match product of dims");
  double norm2 = 0.0;
  for (const Complex& z : amps_) norm2 += std::norm(z);
  const double norm = std::sqrt(norm2);
  if (norm < kMinNorm) fail(Errc::NotNormalizable, "state norm below 1e-12");
  for (Complex& z : amps_) z /= norm;
}

int PureState::flat_index(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) fail(Errc::DimensionMismatch, "digit count mismatch");
  int flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims_[k]) fail(Errc::OutOfRange, "digit out of range");
    flat = flat * dims_[k] + digits[k];
  }
  return flat;
}

std::vector<int> PureState::digits(int flat) const {
  std::vector<int> d(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    d[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return d;
}

PureState from_amplitudes(std::vector<int> dims, std::vector<Complex> amplitudes) {
  return PureState(std::move(dims), std::move(amplitudes));
}

PureState ghz() {
  std::vector<Complex> a(8);
  a[0] = a[7] = 1.0 / std::sqrt(2.0);
  return PureState({2, 2, 2}, std::move(a));
}

PureState w() { return w_n(3); }

PureState w_n(int parties) {
  if (parties < 3) fail(Errc::BadPartyCount, "w_n requires at least 3 parties");
  if (parties > 20) fail(Errc::BadPartyCount, "w_n limited to 20 parties");
  std::vector<Complex> a(std::size_t{1} << parties);
  const double amp = 1.0 / std::sqrt(static_cast<double>(parties));
  for (int k = 0; k < parties; ++k) a[std::size_t{1} << k] = amp;
  return PureState(std::vector<int>(static_cast<std::size_t>(parties), 2), std::move(a));
}

PureState epr() {
  std::vector<Complex> a(4);
  a[0] = a[3] = 1.0 / std::sqrt(2.0);
  return PureState({2, 2}, std::move(a));
}

PureState basis_state(std::vector<int> dims, int index) {
  const long long total = checked_total_dim(dims);
  if (index < 0 || index >= total) fail(Errc::OutOfRange, "basis index out of range");
  std::vector<Complex> a(static_cast<std::size_t>(total));
  a[static_cast<std::size_t>(index)] = 1.0;
  return PureState(std::move(dims), std::move(a));
}

GhzCanonicalParams GhzCanonicalParams::from_angles(double delta, double alpha, double beta,
                                                   double gamma, double phi) {
  GhzCanonicalParams p;
  p.delta = delta;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.phi = phi;
  p.K = 1.0 / (1.0 + 2.0 * std::cos(delta) * std::sin(delta) * std::cos(alpha) *
                          std::cos(beta) * std::cos(gamma) * std::cos(phi));
  p.validate();
  return p;
}

void GhzCanonicalParams::validate() const {
  constexpr double kSlack = 1e-12;  // tolerate closed endpoints hit by extraction
  auto in = [](double x, double lo, double hi) { return x > lo && x <= hi + kSlack; };
  if (!in(delta, 0.0, kPi / 4.0)) fail(Errc::BadRange, "delta outside (0, pi/4]");
  if (!in(alpha, 0.0, kPi / 2.0)) fail(Errc::BadRange, "alpha outside (0, pi/2]");
  if (!in(beta, 0.0, kPi / 2.0)) fail(Errc::BadRange, "beta outside (0, pi/2]");
  if (!in(gamma, 0.0, kPi / 2.0)) fail(Errc::BadRange, "gamma outside (0, pi/2]");
  if (phi < 0.0 || phi >= 2.0 * kPi) fail(Errc::BadRange, "phi outside [0, 2 pi)");
  const double expected = 1.0 / (1.0 + 2.0 * std::cos(delta) * std::sin(delta) *
                                           std::cos(alpha) * std::cos(beta) * std::cos(gamma) *
                                           std::cos(phi));
  if (!(K > 0.5) || std::abs(K - expected) > 1e-10 * std::max(1.0, expected))
    fail(Errc::BadRange, "K inconsistent with the angles");
}

WCanonicalParams WCanonicalParams::from_abc(double a, double b, double c) {
  WCanonicalParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = 1.0 - (a + b + c);
  if (p.d < 0.0 && p.d > -1e-12) p.d = 0.0;
  p.validate();
  return p;
}

void WCanonicalParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    fail(Errc::BadRange, "a, b, c must be positive");
  if (d < 0.0) fail(Errc::BadRange, "d must be non-negative");
  if (std::abs(a + b + c + d - 1.0) > 1e-10) fail(Errc::BadRange, "a+b+c+d must equal 1");
}

PureState state_from_ghz_params(const GhzCanonicalParams& p) {
  p.validate();
  const double cd = std::cos(p.delta), sd = std::sin(p.delta);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  const Complex second = std::sqrt(p.K) * sd * std::polar(1.0, p.phi);
  const double fa[2] = {ca, sa}, fb[2] = {cb, sb}, fc[2] = {cg, sg};

  std::vector<Complex> amps(8);
  amps[0] = std::sqrt(p.K) * cd;
  for (int qa = 0; qa < 2; ++qa)
    for (int qb = 0; qb < 2; ++qb)
      for (int qc = 0; qc < 2; ++qc)
        amps[static_cast<std::size_t>(4 * qa + 2 * qb + qc)] +=
            second * fa[qa] * fb[qb] * fc[qc];
  return PureState({2, 2, 2}, std::move(amps));
}

PureState state_from_w_params(const WCanonicalParams& p) {
  p.validate();
  std::vector<Complex> amps(8);
  amps[1] = std::sqrt(p.a);
  amps[2] = std::sqrt(p.b);
  amps[4] = std::sqrt(p.c);
  amps[0] = std::sqrt(p.d);
  return PureState({2, 2, 2}, std::move(amps));
}

PureState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  const long long total = checked_total_dim(dims);
  Rng rng(seed);
  std::vector<Complex> amps(static_cast<std::size_t>(total));
  for (Complex& z : amps) z = rng.complex_gaussian();
  return PureState(dims, std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims()) fail(Errc::DimensionMismatch, "inner product dims mismatch");
  Complex s = 0.0;
  for (int i = 0; i < a.total_dim(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

PureState permute_parties(const PureState& psi, std::span<const int> perm) {
  const int n = psi.num_parties();
  if (static_cast<int>(perm.size()) != n) fail(Errc::BadSubset, "permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      fail(Errc::BadSubset, "invalid party permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  // New party k holds what old party perm[k] held.
  std::vector<int> new_dims(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) new_dims[static_cast<std::size_t>(k)] = psi.dims()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
  std::vector<Complex> amps(static_cast<std::size_t>(psi.total_dim()));
  std::vector<int> new_digits(static_cast<std::size_t>(n));
  for (int flat = 0; flat < psi.total_dim(); ++flat) {
    const std::vector<int> d = psi.digits(flat);
    for (int k = 0; k < n; ++k)
      new_digits[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    int target = 0;
    for (int k = 0; k < n; ++k) target = target * new_dims[static_cast<std::size_t>(k)] + new_digits[static_cast<std::size_t>(k)];
    amps[static_cast<std::size_t>(target)] = psi.amplitude(flat);
  }
  return PureState(std::move(new_dims), std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps(static_cast<std::size_t>(a.total_dim()) * b.total_dim());
  for (int i = 0; i < a.total_dim(); ++i)
    for (int j = 0; j < b.total_dim(); ++j)
      amps[static_cast<std::size_t>(i) * b.total_dim() + j] = a.amplitude(i) * b.amplitude(j);
  return PureState(std::move(dims), std::move(amps));
}

bool approx_equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  if (a.dims() != b.dims()) return false;
  // Align the phase of the overlap; |<a|b>| = 1 iff same ray.
  const Complex ov = inner_product(a, b);
  const double mag = std::abs(ov);
  const Complex phase = mag > 1e-15 ? ov / mag : Complex(1.0, 0.0);
  double diff2 = 0.0;
  for (int i = 0; i < a.total_dim(); ++i)
    diff2 += std::norm(a.amplitude(i) * phase - b.amplitude(i));
  return std::sqrt(diff2) <= tol;
}

}  // namespace slocc3

#include "slocc3/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace slocc3 {

namespace {

constexpr double kPi = std::numbers::pi;

// Condition-number cap for the Gram matrix of the two product vectors; a
// nearly singular Gram matrix means the biorthonormal construction cannot
// be trusted.
constexpr double kGramCondCap = 1e8;

// Residual weight tolerated on the |011> component during W-form
// extraction. A state that passed classification as W-class carries at
// most round-off there; anything larger is rejected.
constexpr double kWResidualTol = 1e-6;

// Below this, a magnitude is treated as an exact zero when picking phase
// references.
constexpr double kPhaseTol = 1e-12;

std::vector<int> three_qubits() { return {2, 2, 2}; }

void require_three_qubits(const PureState& psi) {
  if (psi.dims() != three_qubits())
    fail(Errc::BadPartyCount, "operation expects a three-qubit state");
}

double norm_of(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Complex> normalized(std::vector<Complex> v) {
  const double n = norm_of(v);
  if (n < 1e-300) fail(Errc::DegenerateRange, "cannot normalize zero vector");
  for (Complex& z : v) z /= n;
  return v;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Unitary with U a = |0> for a unit 2-vector a.
CMatrix unitary_to_e0(const std::vector<Complex>& a) {
  return CMatrix{{std::conj(a[0]), std::conj(a[1])}, {-a[1], a[0]}};
}

// Partial inner product <xi| psi >_BC: the remaining A-side 2-vector.
std::vector<Complex> project_bc(const PureState& psi, const std::vector<Complex>& xi) {
  std::vector<Complex> a(2);
  for (int qa = 0; qa < 2; ++qa) {
    Complex s = 0.0;
    for (int bc = 0; bc < 4; ++bc) s += std::conj(xi[static_cast<std::size_t>(bc)]) * psi.amplitude(4 * qa + bc);
    a[static_cast<std::size_t>(qa)] = s;
  }
  return a;
}

Complex det2_of_vec(const std::vector<Complex>& v) {
  return v[0] * v[3] - v[1] * v[2];
}

// Splits a unit product 4-vector v = b (x) c into unit factors whose
// Kronecker product reproduces v including its phase.
std::pair<std::vector<Complex>, std::vector<Complex>> split_product(
    const std::vector<Complex>& v) {
  const double row0 = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  const double row1 = std::sqrt(std::norm(v[2]) + std::norm(v[3]));
  std::vector<Complex> c(2);
  if (row0 >= row1) {
    c[0] = v[0] / row0;
    c[1] = v[1] / row0;
  } else {
    c[0] = v[2] / row1;
    c[1] = v[3] / row1;
  }
  std::vector<Complex> b(2);
  b[0] = v[0] * std::conj(c[0]) + v[1] * std::conj(c[1]);
  b[1] = v[2] * std::conj(c[0]) + v[3] * std::conj(c[1]);
  const double nb = norm_of(b);
  b[0] /= nb;
  b[1] /= nb;
  return {b, c};
}

// Orthonormal basis of R(rho_BC). The range equals the span of the two
// A-slices of the amplitude tensor, so the basis is built from exact state
// data by Gram-Schmidt instead of through eigenvectors of rho_BC (whose
// accuracy degrades when the nonzero spectrum is nearly degenerate with
// the null space).
struct RangeBasis {
  std::vector<Complex> xi1, xi2;
};

RangeBasis range_of_rho_bc(const PureState& psi, const Tolerances& tol) {
  std::vector<Complex> r0(4), r1(4);
  for (int bc = 0; bc < 4; ++bc) {
    r0[static_cast<std::size_t>(bc)] = psi.amplitude(bc);
    r1[static_cast<std::size_t>(bc)] = psi.amplitude(4 + bc);
  }
  // det(rho_A) = Gram determinant of the slices; it vanishing is exactly
  // the rank(rho_BC) < 2 condition.
  if (det_reduced(psi, 0) <= tol.eps_rank)
    fail(Errc::DegenerateRange, "rank of rho_BC below 2");

  if (norm_of(r1) > norm_of(r0)) std::swap(r0, r1);
  RangeBasis rb;
  rb.xi1 = normalized(std::move(r0));
  const Complex overlap = dot(rb.xi1, r1);
  for (int i = 0; i < 4; ++i) r1[static_cast<std::size_t>(i)] -= overlap * rb.xi1[static_cast<std::size_t>(i)];
  rb.xi2 = normalized(std::move(r1));
  return rb;
}

// psi = a1 (x) b1 (x) c1 + a2 (x) b2 (x) c2 with a_i carrying the term
// weights and b_i, c_i unit.
struct TwoTermDecomposition {
  std::array<std::vector<Complex>, 2> a, b, c;
};

TwoTermDecomposition two_term_decomposition(const PureState& psi,
                                            const ProductVectorSet& pvs) {
  const std::vector<Complex>& p1 = pvs.vectors[0];
  const std::vector<Complex>& p2 = pvs.vectors[1];

  const Complex g = dot(p1, p2);
  const double g2 = std::norm(g);
  if (g2 >= 1.0 || (1.0 + std::abs(g)) / (1.0 - std::abs(g)) > kGramCondCap)
    fail(Errc::Inconclusive, "Gram matrix of product vectors is ill-conditioned");

  // Duals eta_i in span{p1, p2} with <eta_i | p_j> = delta_ij, via the
  // inverse Gram matrix.
  const double inv_det = 1.0 / (1.0 - g2);
  const Complex i00 = inv_det, i11 = inv_det;
  const Complex i01 = -g * inv_det, i10 = -std::conj(g) * inv_det;
  std::vector<Complex> eta1(4), eta2(4);
  for (int k = 0; k < 4; ++k) {
    eta1[static_cast<std::size_t>(k)] = std::conj(i00) * p1[static_cast<std::size_t>(k)] +
                                        std::conj(i01) * p2[static_cast<std::size_t>(k)];
    eta2[static_cast<std::size_t>(k)] = std::conj(i10) * p1[static_cast<std::size_t>(k)] +
                                        std::conj(i11) * p2[static_cast<std::size_t>(k)];
  }

  TwoTermDecomposition d;
  d.a[0] = project_bc(psi, eta1);
  d.a[1] = project_bc(psi, eta2);
  std::tie(d.b[0], d.c[0]) = split_product(p1);
  std::tie(d.b[1], d.c[1]) = split_product(p2);
  return d;
}

struct GhzExtraction {
  GhzCanonicalParams params;
  std::array<CMatrix, 3> to_canonical;  // local unitaries mapping psi onto the form
};

// Extraction for a fixed ordering: term `first` becomes the |000>
// component, term `second` the product component.
GhzExtraction extract_ordered(const TwoTermDecomposition& d, int first, int second) {
  const double z1 = norm_of(d.a[static_cast<std::size_t>(first)]);
  const double z2 = norm_of(d.a[static_cast<std::size_t>(second)]);
  if (z2 < 1e-12) fail(Errc::NotGhzClass, "degenerate two-term decomposition");

  const std::array<std::vector<Complex>, 3> lead = {
      normalized(d.a[static_cast<std::size_t>(first)]), d.b[static_cast<std::size_t>(first)],
      d.c[static_cast<std::size_t>(first)]};
  const std::array<std::vector<Complex>, 3> sub = {
      normalized(d.a[static_cast<std::size_t>(second)]), d.b[static_cast<std::size_t>(second)],
      d.c[static_cast<std::size_t>(second)]};

  GhzExtraction out;
  double angles[3];
  double phase_sum = 0.0;
  for (int party = 0; party < 3; ++party) {
    CMatrix u = unitary_to_e0(lead[static_cast<std::size_t>(party)]);
    const std::vector<Complex> w = u * sub[static_cast<std::size_t>(party)];
    const double r0 = std::abs(w[0]);
    const double r1 = std::abs(w[1]);
    if (r1 <= kPhaseTol)
      fail(Errc::Inconclusive, "parallel product factors in two-term decomposition");
    angles[party] = std::atan2(r1, r0);
    // Pull the factor's phase out; twist the |1> row of u so that the
    // residual factor is the real pair (r0, r1).
    const double chi = r0 > kPhaseTol ? std::arg(w[0]) : std::arg(w[1]);
    const double twist = chi - std::arg(w[1]);
    u(1, 0) *= std::polar(1.0, twist);
    u(1, 1) *= std::polar(1.0, twist);
    phase_sum += chi;
    out.to_canonical[static_cast<std::size_t>(party)] = u;
  }

  double phi = std::fmod(phase_sum, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;

  const double delta = std::atan2(z2, z1);
  out.params = GhzCanonicalParams::from_angles(delta, angles[0], angles[1], angles[2], phi);
  return out;
}

GhzExtraction ghz_extract(const PureState& psi, const Tolerances& tol) {
  const ProductVectorSet pvs = product_vectors_in_range(psi, tol);
  if (pvs.count != 2) fail(Errc::NotGhzClass, "state is not GHZ-class");
  const TwoTermDecomposition d = two_term_decomposition(psi, pvs);

  const double z0 = norm_of(d.a[0]);
  const double z1 = norm_of(d.a[1]);
  const double scale = std::max(z0, z1);
  if (std::abs(z0 - z1) <= 1e-12 * scale) {
    // delta = pi/4 exactly: ordering of the two terms is a convention; pick
    // the lexicographically smaller (alpha, beta, gamma, phi).
    GhzExtraction e01 = extract_ordered(d, 0, 1);
    GhzExtraction e10 = extract_ordered(d, 1, 0);
    const auto key = [](const GhzCanonicalParams& p) {
      return std::make_tuple(p.alpha, p.beta, p.gamma, p.phi);
    };
    return key(e01.params) <= key(e10.params) ? e01 : e10;
  }
  return z0 >= z1 ? extract_ordered(d, 0, 1) : extract_ordered(d, 1, 0);
}

struct WExtraction {
  WCanonicalParams params;
  std::array<CMatrix, 3> to_canonical;
  std::vector<Complex> canonical_amps;  // transformed amplitudes, |011> residual kept
};

WExtraction w_extract(const PureState& psi, const Tolerances& tol) {
  const ProductVectorSet pvs = product_vectors_in_range(psi, tol);
  if (pvs.count != 1) fail(Errc::NotWClass, "range of rho_BC holds two product vectors");
  const std::vector<Complex>& p = pvs.vectors[0];

  // Vector of the range orthogonal to p.
  const RangeBasis rb = range_of_rho_bc(psi, tol);
  std::vector<Complex> phi_bc(4);
  const Complex o1 = dot(p, rb.xi1);
  const Complex o2 = dot(p, rb.xi2);
  // Orthogonalize whichever basis vector has the smaller overlap with p.
  const std::vector<Complex>& seed = std::abs(o1) <= std::abs(o2) ? rb.xi1 : rb.xi2;
  const Complex ov = std::abs(o1) <= std::abs(o2) ? o1 : o2;
  for (int i = 0; i < 4; ++i)
    phi_bc[static_cast<std::size_t>(i)] = seed[static_cast<std::size_t>(i)] - ov * p[static_cast<std::size_t>(i)];
  phi_bc = normalized(phi_bc);

  const std::vector<Complex> a1 = project_bc(psi, p);
  const std::vector<Complex> a2 = project_bc(psi, phi_bc);
  if (norm_of(a2) < 1e-12) fail(Errc::NotWClass, "state is product with respect to A");

  const auto [b1, c1] = split_product(p);
  WExtraction out;
  out.to_canonical[0] = unitary_to_e0(normalized(a2));
  out.to_canonical[1] = unitary_to_e0(b1);
  out.to_canonical[2] = unitary_to_e0(c1);

  // Apply the local unitaries.
  std::vector<Complex> amps(8);
  for (int qa = 0; qa < 2; ++qa)
    for (int qb = 0; qb < 2; ++qb)
      for (int qc = 0; qc < 2; ++qc) {
        Complex s = 0.0;
        for (int ja = 0; ja < 2; ++ja)
          for (int jb = 0; jb < 2; ++jb)
            for (int jc = 0; jc < 2; ++jc)
              s += out.to_canonical[0](qa, ja) * out.to_canonical[1](qb, jb) *
                   out.to_canonical[2](qc, jc) * psi.amplitude(4 * ja + 2 * jb + jc);
        amps[static_cast<std::size_t>(4 * qa + 2 * qb + qc)] = s;
      }

  const double residual = std::abs(amps[3]);  // |011>
  if (residual > kWResidualTol)
    fail(Errc::NotWClass, "second product component too large for the W form");

  double a = std::norm(amps[1]);
  double b = std::norm(amps[2]);
  double c = std::norm(amps[4]);
  double dd = std::norm(amps[0]);
  const double total = a + b + c + dd;
  a /= total;
  b /= total;
  c /= total;
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    fail(Errc::NotWClass, "canonical W weights must be positive");
  double d_final = 1.0 - (a + b + c);
  if (d_final < 0.0) d_final = 0.0;
  out.params = WCanonicalParams{a, b, c, d_final};
  out.params.validate();
  out.canonical_amps = std::move(amps);
  return out;
}

// Schmidt split of a bipartite 4-vector across its 2x2 reshape; returns
// {sigma_k, left_k, right_k} with v = sum sigma_k l_k (x) r_k.
struct SchmidtPair {
  std::array<double, 2> sigma;
  std::array<std::vector<Complex>, 2> left, right;
};

SchmidtPair schmidt_split_2x2(const std::vector<Complex>& v) {
  CMatrix m(2, 2);
  m(0, 0) = v[0];
  m(0, 1) = v[1];
  m(1, 0) = v[2];
  m(1, 1) = v[3];
  const CMatrix mmh = m * m.adjoint();
  const HermitianEig eig = eig_hermitian(mmh);
  SchmidtPair out;
  for (int k = 0; k < 2; ++k) {
    out.sigma[static_cast<std::size_t>(k)] = std::sqrt(std::max(eig.eigenvalues[static_cast<std::size_t>(k)], 0.0));
    std::vector<Complex> l = {eig.eigenvectors(0, k), eig.eigenvectors(1, k)};
    std::vector<Complex> r(2);
    if (out.sigma[static_cast<std::size_t>(k)] > 1e-150) {
      // r_k = M^T conj(l_k) / sigma_k
      r[0] = (m(0, 0) * std::conj(l[0]) + m(1, 0) * std::conj(l[1])) / out.sigma[static_cast<std::size_t>(k)];
      r[1] = (m(0, 1) * std::conj(l[0]) + m(1, 1) * std::conj(l[1])) / out.sigma[static_cast<std::size_t>(k)];
    }
    out.left[static_cast<std::size_t>(k)] = std::move(l);
    out.right[static_cast<std::size_t>(k)] = std::move(r);
  }
  return out;
}

// Factor of the single rank-1 party together with the residual pair state.
struct ProductSplit {
  std::vector<Complex> factor;   // unit vector of the product party
  std::vector<Complex> pair;     // 4-vector of the remaining two parties
};

ProductSplit split_off_party(const PureState& psi, int party) {
  const std::array<int, 1> keep = {party};
  const DensityMatrix rho = reduce(psi, keep);
  const HermitianEig eig = eig_hermitian(rho.matrix());
  ProductSplit out;
  out.factor = {eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)};
  out.pair.assign(4, Complex{});
  for (int flat = 0; flat < 8; ++flat) {
    const std::vector<int> dg = psi.digits(flat);
    int pair_idx = 0;
    for (int p = 0; p < 3; ++p)
      if (p != party) pair_idx = pair_idx * 2 + dg[static_cast<std::size_t>(p)];
    out.pair[static_cast<std::size_t>(pair_idx)] +=
        std::conj(out.factor[static_cast<std::size_t>(dg[static_cast<std::size_t>(party)])]) *
        psi.amplitude(flat);
  }
  return out;
}

ProductTerm make_term(int product_party, const std::vector<Complex>& factor,
                      const std::vector<Complex>& left, const std::vector<Complex>& right,
                      double coeff) {
  // `left` and `right` belong to the two non-product parties in increasing
  // order; the coefficient is folded into party A's factor.
  ProductTerm t;
  int slot = 0;
  for (int p = 0; p < 3; ++p) {
    if (p == product_party)
      t.factors[static_cast<std::size_t>(p)] = factor;
    else
      t.factors[static_cast<std::size_t>(p)] = (slot++ == 0) ? left : right;
  }
  for (Complex& z : t.factors[0]) z *= coeff;
  return t;
}

}  // namespace

const char* slocc_label_name(SloccLabel label) noexcept {
  switch (label) {
    case SloccLabel::ProductABC: return "A-B-C";
    case SloccLabel::A_BC: return "A-BC";
    case SloccLabel::B_AC: return "B-AC";
    case SloccLabel::C_AB: return "C-AB";
    case SloccLabel::W: return "W";
    case SloccLabel::GHZ: return "GHZ";
  }
  return "?";
}

std::optional<SloccLabel> slocc_label_from_name(const std::string& name) noexcept {
  for (SloccLabel l : {SloccLabel::ProductABC, SloccLabel::A_BC, SloccLabel::B_AC,
                       SloccLabel::C_AB, SloccLabel::W, SloccLabel::GHZ})
    if (name == slocc_label_name(l)) return l;
  return std::nullopt;
}

SloccClass classify(const PureState& psi, const Tolerances& tol) {
  require_three_qubits(psi);

  std::array<double, 3> dets{};
  std::array<bool, 3> vanished{};
  int n_vanished = 0;
  for (int k = 0; k < 3; ++k) {
    dets[static_cast<std::size_t>(k)] = det_reduced(psi, k);
    const double d = dets[static_cast<std::size_t>(k)];
    if (d > tol.eps_rank && d < 10.0 * tol.eps_rank)
      fail(Errc::Inconclusive, "det(rho) inside the guard band; tighten eps_rank");
    vanished[static_cast<std::size_t>(k)] = d <= tol.eps_rank;
    if (vanished[static_cast<std::size_t>(k)]) ++n_vanished;
  }

  SloccClass out{};
  for (int k = 0; k < 3; ++k)
    out.local_ranks[static_cast<std::size_t>(k)] = vanished[static_cast<std::size_t>(k)] ? 1 : 2;

  if (n_vanished == 3) {
    out.label = SloccLabel::ProductABC;
    out.tensor_rank = 1;
    return out;
  }
  if (n_vanished == 2)
    fail(Errc::Inconclusive, "two vanishing local determinants cannot occur for a pure state");
  if (n_vanished == 1) {
    out.label = vanished[0] ? SloccLabel::A_BC : vanished[1] ? SloccLabel::B_AC : SloccLabel::C_AB;
    out.tensor_rank = 2;
    return out;
  }

  const double tau = three_tangle(psi);
  if (tau > tol.eps_tau) {
    out.label = SloccLabel::GHZ;
    out.tensor_rank = 2;
  } else {
    out.label = SloccLabel::W;
    out.tensor_rank = 3;
  }
  return out;
}

ProductVectorSet product_vectors_in_range(const PureState& psi, const Tolerances& tol) {
  require_three_qubits(psi);
  const RangeBasis rb = range_of_rho_bc(psi, tol);

  // det(M1 + t M2) = c + b t + a t^2 over the reshaped basis vectors.
  const Complex m1[4] = {rb.xi1[0], rb.xi1[1], rb.xi1[2], rb.xi1[3]};
  const Complex m2[4] = {rb.xi2[0], rb.xi2[1], rb.xi2[2], rb.xi2[3]};
  const Complex a = m2[0] * m2[3] - m2[1] * m2[2];
  const Complex c = m1[0] * m1[3] - m1[1] * m1[2];
  const Complex b = m1[0] * m2[3] + m2[0] * m1[3] - m1[1] * m2[2] - m2[1] * m1[2];

  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  ProductVectorSet out;
  if (scale < 1e-14)
    fail(Errc::DegenerateRange, "range of rho_BC is entirely product");
  const double coeff_tol = 1e-12 * scale;

  auto add_vector = [&](Complex t) {
    std::vector<Complex> v(4);
    for (int i = 0; i < 4; ++i)
      v[static_cast<std::size_t>(i)] = rb.xi1[static_cast<std::size_t>(i)] + t * rb.xi2[static_cast<std::size_t>(i)];
    out.vectors.push_back(normalized(std::move(v)));
    out.finite_roots.push_back(t);
  };

  if (std::abs(a) <= coeff_tol) {
    out.root_at_infinity = true;
    if (std::abs(b) <= coeff_tol) {
      // Degree zero: the only product direction is xi2 itself (t = inf).
      out.vectors.push_back(rb.xi2);
    } else {
      add_vector(-c / b);
      out.vectors.push_back(rb.xi2);
    }
  } else {
    const Complex disc = b * b - 4.0 * a * c;
    if (std::abs(disc) <= tol.eps_disc * scale * scale) {
      add_vector(-b / (2.0 * a));
    } else {
      const Complex root_disc = std::sqrt(disc);
      // Pick the sign that avoids cancellation in b + s*sqrt(disc).
      const Complex q = std::abs(b + root_disc) >= std::abs(b - root_disc)
                            ? -0.5 * (b + root_disc)
                            : -0.5 * (b - root_disc);
      add_vector(q / a);
      add_vector(c / q);
    }
  }
  out.count = static_cast<int>(out.vectors.size());
  return out;
}

GhzCanonicalParams ghz_canonical(const PureState& psi, const Tolerances& tol) {
  require_three_qubits(psi);
  if (classify(psi, tol).label != SloccLabel::GHZ)
    fail(Errc::NotGhzClass, "ghz_canonical requires a GHZ-class state");
  return ghz_extract(psi, tol).params;
}

WCanonicalParams w_canonical(const PureState& psi, const Tolerances& tol) {
  require_three_qubits(psi);
  if (classify(psi, tol).label != SloccLabel::W)
    fail(Errc::NotWClass, "w_canonical requires a W-class state");
  return w_extract(psi, tol).params;
}

TensorRankResult tensor_rank(const PureState& psi, const Tolerances& tol) {
  require_three_qubits(psi);
  const SloccClass cls = classify(psi, tol);

  TensorRankResult out;
  out.rank = cls.tensor_rank;

  switch (cls.label) {
    case SloccLabel::ProductABC: {
      const ProductSplit sp = split_off_party(psi, 0);
      const auto [v, w_fac] = split_product(normalized(sp.pair));
      // Fold the full coefficient into the A factor via the exact overlap.
      std::vector<Complex> pair_vec(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          pair_vec[static_cast<std::size_t>(2 * i + j)] = v[static_cast<std::size_t>(i)] * w_fac[static_cast<std::size_t>(j)];
      std::vector<Complex> a_fac = project_bc(psi, pair_vec);
      ProductTerm t;
      t.factors = {std::move(a_fac), v, w_fac};
      out.terms.push_back(std::move(t));
      break;
    }
    case SloccLabel::A_BC:
    case SloccLabel::B_AC:
    case SloccLabel::C_AB: {
      const int party = cls.label == SloccLabel::A_BC ? 0 : cls.label == SloccLabel::B_AC ? 1 : 2;
      const ProductSplit sp = split_off_party(psi, party);
      const SchmidtPair sc = schmidt_split_2x2(sp.pair);
      for (int k = 0; k < 2; ++k)
        out.terms.push_back(make_term(party, sp.factor, sc.left[static_cast<std::size_t>(k)],
                                      sc.right[static_cast<std::size_t>(k)],
                                      sc.sigma[static_cast<std::size_t>(k)]));
      break;
    }
    case SloccLabel::GHZ: {
      const ProductVectorSet pvs = product_vectors_in_range(psi, tol);
      const TwoTermDecomposition d = two_term_decomposition(psi, pvs);
      for (int i = 0; i < 2; ++i) {
        ProductTerm t;
        t.factors = {d.a[static_cast<std::size_t>(i)], d.b[static_cast<std::size_t>(i)], d.c[static_cast<std::size_t>(i)]};
        out.terms.push_back(std::move(t));
      }
      break;
    }
    case SloccLabel::W: {
      const WExtraction ext = w_extract(psi, tol);
      // Three terms of the canonical form, mapped back through the inverse
      // (adjoint) local unitaries.
      std::array<CMatrix, 3> inv;
      for (int p = 0; p < 3; ++p) inv[static_cast<std::size_t>(p)] = ext.to_canonical[static_cast<std::size_t>(p)].adjoint();
      const std::vector<Complex>& ca = ext.canonical_amps;
      const std::vector<Complex> e0 = {Complex{1.0}, Complex{}};
      const std::vector<Complex> e1 = {Complex{}, Complex{1.0}};
      auto back = [&](int p, const std::vector<Complex>& v) { return inv[static_cast<std::size_t>(p)] * v; };

      ProductTerm t1;  // (amps[0] |0> + amps[4] |1>) (x) |0> (x) |0>
      t1.factors = {back(0, {ca[0], ca[4]}), back(1, e0), back(2, e0)};
      ProductTerm t2;  // amps[1] |0> (x) |0> (x) |1>
      t2.factors = {back(0, {ca[1], Complex{}}), back(1, e0), back(2, e1)};
      ProductTerm t3;  // amps[2] |0> (x) |1> (x) |0>
      t3.factors = {back(0, {ca[2], Complex{}}), back(1, e1), back(2, e0)};
      out.terms = {std::move(t1), std::move(t2), std::move(t3)};
      break;
    }
  }
  return out;
}

std::vector<Complex> reconstruct(const std::vector<ProductTerm>& terms) {
  std::vector<Complex> amps(8);
  for (const ProductTerm& t : terms)
    for (int qa = 0; qa < 2; ++qa)
      for (int qb = 0; qb < 2; ++qb)
        for (int qc = 0; qc < 2; ++qc)
          amps[static_cast<std::size_t>(4 * qa + 2 * qb + qc)] +=
              t.factors[0][static_cast<std::size_t>(qa)] * t.factors[1][static_cast<std::size_t>(qb)] *
              t.factors[2][static_cast<std::size_t>(qc)];
  return amps;
}

ClassificationReport classification_report(const PureState& psi, const Tolerances& tol) {
  ClassificationReport rep;
  rep.cls = classify(psi, tol);
  rep.tau = three_tangle(psi);
  switch (rep.cls.label) {
    case SloccLabel::GHZ:
      rep.ghz_params = ghz_canonical(psi, tol);
      break;
    case SloccLabel::W:
      rep.w_params = w_canonical(psi, tol);
      break;
    case SloccLabel::A_BC:
    case SloccLabel::B_AC:
    case SloccLabel::C_AB: {
      // Schmidt coefficients of the entangled pair: spectrum of either
      // member's reduced state.
      const int member = rep.cls.label == SloccLabel::A_BC ? 1 : 0;
      const std::array<int, 1> keep = {member};
      std::vector<double> ev = reduce(psi, keep).eigenvalues();
      rep.schmidt_coefficients = {ev[0], ev[1]};
      break;
    }
    case SloccLabel::ProductABC:
      break;
  }
  return rep;
}

}  // namespace slocc3

#include "slocc3/multiparty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace slocc3 {

namespace {

double apply_pair_measure(PairMeasure m, double concurrence) {
  switch (m) {
    case PairMeasure::ConcurrenceSquared: return concurrence * concurrence;
    case PairMeasure::Formation: return ent_formation(concurrence);
    case PairMeasure::E2: return e2_monotone(concurrence);
  }
  return 0.0;
}

}  // namespace

const char* pair_measure_name(PairMeasure m) noexcept {
  switch (m) {
    case PairMeasure::ConcurrenceSquared: return "c2";
    case PairMeasure::Formation: return "ef";
    case PairMeasure::E2: return "e2";
  }
  return "?";
}

ResidualReport residual_report(const PureState& psi, PairMeasure measure) {
  if (psi.dims() != std::vector<int>{2, 2, 2})
    fail(Errc::BadPartyCount, "residual_report expects a three-qubit state");

  const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  std::array<double, 3> conc{};
  for (std::size_t k = 0; k < 3; ++k)
    conc[k] = concurrence_mixed(reduce(psi, pairs[k]));

  ResidualReport r{};
  r.measure = measure;
  r.e_tau = conc[0] * conc[0] + conc[1] * conc[1] + conc[2] * conc[2];
  r.c2_min = std::min({conc[0] * conc[0], conc[1] * conc[1], conc[2] * conc[2]});
  double sum = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double e = apply_pair_measure(measure, conc[k]);
    sum += e;
    worst = k == 0 ? e : std::min(worst, e);
  }
  r.e_bar = sum / 3.0;
  r.e_min = worst;
  return r;
}

double etau_from_ghz_params(const GhzCanonicalParams& p) {
  p.validate();
  const double cd = std::cos(p.delta), sd = std::sin(p.delta);
  const double sa = std::sin(p.alpha), sb = std::sin(p.beta), sg = std::sin(p.gamma);
  const double bracket = sa * sa * sb * sb + sa * sa * sg * sg + sb * sb * sg * sg -
                         3.0 * sa * sa * sb * sb * sg * sg;
  return 4.0 * p.K * p.K * cd * cd * sd * sd * bracket;
}

double appendix_c_f(double x, double y, double z) {
  if (x < 0.0 || x >= 1.0 || y < 0.0 || y >= 1.0 || z < 0.0 || z >= 1.0)
    fail(Errc::OutOfRange, "f is defined on [0, 1)^3");
  const double x2 = x * x, y2 = y * y, z2 = z * z;
  return 3.0 * (x2 + y2 + z2) - 6.0 * (x2 * y2 + x2 * z2 + y2 * z2) + 5.0 * (x2 * y2 * z2) -
         4.0 + 8.0 * x * y * z;
}

GridSearchResult grid_max_f(int resolution, int workers) {
  if (resolution < 2) fail(Errc::OutOfRange, "grid resolution must be >= 2");
  workers = std::clamp(workers, 1, 64);

  struct Best {
    double value = -std::numeric_limits<double>::infinity();
    long long flat = -1;
  };
  std::vector<Best> best(static_cast<std::size_t>(workers));

  auto run_slab = [&](int worker) {
    Best local;
    for (int i = worker; i < resolution; i += workers) {
      const double x = static_cast<double>(i) / resolution;
      for (int j = 0; j < resolution; ++j) {
        const double y = static_cast<double>(j) / resolution;
        for (int k = 0; k < resolution; ++k) {
          const double z = static_cast<double>(k) / resolution;
          const double v = appendix_c_f(x, y, z);
          const long long flat =
              (static_cast<long long>(i) * resolution + j) * resolution + k;
          if (v > local.value || (v == local.value && flat < local.flat)) {
            local.value = v;
            local.flat = flat;
          }
        }
      }
    }
    best[static_cast<std::size_t>(worker)] = local;
  };

  if (workers == 1) {
    run_slab(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_slab, w);
    for (std::thread& t : pool) t.join();
  }

  Best merged;
  for (const Best& b : best)
    if (b.value > merged.value || (b.value == merged.value && b.flat < merged.flat)) merged = b;

  GridSearchResult out;
  out.max_value = merged.value;
  const long long k = merged.flat % resolution;
  const long long j = (merged.flat / resolution) % resolution;
  const long long i = merged.flat / resolution / resolution;
  out.argmax = {static_cast<double>(i) / resolution, static_cast<double>(j) / resolution,
                static_cast<double>(k) / resolution};
  return out;
}

DensityMatrix wn_pair_state(int parties) {
  if (parties < 3) fail(Errc::BadPartyCount, "wn_pair_state requires at least 3 parties");
  const double n = static_cast<double>(parties);
  CMatrix rho(4, 4);
  rho(0, 0) = (n - 2.0) / n;       // |00><00|
  rho(1, 1) = rho(2, 2) = 1.0 / n;  // |Psi+><Psi+| block
  rho(1, 2) = rho(2, 1) = 1.0 / n;
  return DensityMatrix::make(std::move(rho));
}

double wn_pair_concurrence(int parties) {
  if (parties < 3) fail(Errc::BadPartyCount, "wn_pair_concurrence requires at least 3 parties");
  return 2.0 / static_cast<double>(parties);
}

DimCount class_count_lower_bound(const std::vector<int>& dims) {
  if (dims.size() < 2) fail(Errc::BadDims, "need at least two parties");
  long long product = 1;
  long long group = 0;
  for (int d : dims) {
    if (d < 2) fail(Errc::BadDims, "every dimension must be >= 2");
    if (product > (1LL << 56) / d) fail(Errc::BadDims, "dimension product too large");
    product *= d;
    group += 2LL * (static_cast<long long>(d) * d - 1);
  }
  DimCount out;
  out.dims = dims;
  out.state_params = 2 * (product - 1);
  out.group_params = group;
  out.lower_bound = out.state_params - out.group_params;
  return out;
}

}  // namespace slocc3

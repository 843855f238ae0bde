#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "slocc3/rng.hpp"

namespace slocc3 {

struct McResult {
  double max_violation = -1.0;
  long worst_index = -1;
  std::uint64_t worst_seed = 0;
};

// Runs `trials` independent trials and keeps the largest violation.
// Trial i always sees the seed derive_seed(master_seed, i), and ties break
// toward the smaller index, so the result is identical for any worker
// count. `fn` maps (trial_index, trial_seed) to a violation value.
template <typename Fn>
McResult run_max_violation(long trials, std::uint64_t master_seed, int workers, Fn fn) {
  if (workers < 1) workers = 1;
  if (workers > 64) workers = 64;
  std::vector<McResult> partial(static_cast<std::size_t>(workers));

  auto run_strided = [&](int worker) {
    McResult local;
    for (long i = worker; i < trials; i += workers) {
      const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
      const double v = fn(i, seed);
      if (v > local.max_violation ||
          (v == local.max_violation && (local.worst_index < 0 || i < local.worst_index))) {
        local.max_violation = v;
        local.worst_index = i;
        local.worst_seed = seed;
      }
    }
    partial[static_cast<std::size_t>(worker)] = local;
  };

  if (workers == 1) {
    run_strided(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_strided, w);
    for (std::thread& t : pool) t.join();
  }

  McResult merged;
  for (const McResult& p : partial) {
    if (p.worst_index < 0) continue;
    if (p.max_violation > merged.max_violation ||
        (p.max_violation == merged.max_violation &&
         (merged.worst_index < 0 || p.worst_index < merged.worst_index))) {
      merged = p;
    }
  }
  return merged;
}

}  // namespace slocc3

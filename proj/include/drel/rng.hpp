// Seeded sampling helpers. std::uniform_int_distribution varies across
// standard libraries, so bounded draws are done by rejection to keep every
// sampled artifact byte-identical across platforms.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "drel/errors.hpp"

namespace drel {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("uniform_below: bound must be positive");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// k distinct indices drawn uniformly from [0, n), returned sorted.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                               std::uint64_t seed) {
  if (k > n) throw ValidationError("sample_indices: k exceeds n");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// n draws with replacement from [0, n); the bootstrap resample used by the
// repeated-run harness.
inline std::vector<std::size_t> bootstrap_indices(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = static_cast<std::size_t>(uniform_below(rng, n));
  }
  return idx;
}

}  // namespace drel

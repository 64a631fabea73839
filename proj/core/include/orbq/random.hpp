#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "orbq/algebra/poly.hpp"

namespace orbq {

// splitmix64 step; used to derive independent per-trial seeds from a root seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);
// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view s);

// Deterministic across platforms: only raw engine output is used, never the
// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(unsigned numerator, unsigned denominator) { return below(denominator) < numerator; }
  // p/q with |p| <= range, 1 <= q <= max_den.
  Scalar scalar(long range, long max_den = 1);
  Scalar nonzero_scalar(long range, long max_den = 1);

  // Random polynomial in the listed variables of total degree <= max_degree;
  // each monomial appears with probability density_num/density_den.
  Poly poly(const Variables& vars, std::span<const std::size_t> dirs, unsigned max_degree, long range = 3,
            unsigned density_num = 1, unsigned density_den = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbq

#include "orbq/random.hpp"

namespace orbq {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Rng::scalar(long range, long max_den) {
  const long p = uniform(-range, range);
  const long q = uniform(1, max_den);
  return ratio(p, q);
}

Scalar Rng::nonzero_scalar(long range, long max_den) {
  long p = uniform(-range, range - 1);
  if (p >= 0) ++p;
  return ratio(p, uniform(1, max_den));
}

Poly Rng::poly(const Variables& vars, std::span<const std::size_t> dirs, unsigned max_degree, long range,
               unsigned density_num, unsigned density_den) {
  Poly out(vars);
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const Monomial& m : monomials_of_degree(dirs.size(), d)) {
      if (!chance(density_num, density_den)) continue;
      Monomial e(vars.size());
      for (std::size_t i = 0; i < dirs.size(); ++i) e.set(dirs[i], m[i]);
      out.add_term(e, nonzero_scalar(range));
    }
  }
  return out;
}

}  // namespace orbq

#pragma once

#include <initializer_list>
#include <vector>

#include "orbq/algebra/group.hpp"
#include "orbq/orbifold/orbifold.hpp"

namespace orbq::test {

inline Matrix mat(std::size_t n, std::initializer_list<long> entries) {
  std::vector<Scalar> v;
  for (long e : entries) v.emplace_back(e);
  return Matrix(n, n, std::move(v));
}

inline OrthMatrix orth(std::size_t n, std::initializer_list<long> entries) { return OrthMatrix(mat(n, entries)); }

inline OrbifoldPtr orbifold(std::size_t n, std::vector<OrthMatrix> gens) { return make_orbifold(n, gens); }

inline OrbifoldPtr r2_pm() { return orbifold(2, {orth(2, {-1, 0, 0, -1})}); }
inline OrbifoldPtr r2_z4() { return orbifold(2, {orth(2, {0, -1, 1, 0})}); }
inline OrbifoldPtr r2_d4() { return orbifold(2, {orth(2, {0, -1, 1, 0}), orth(2, {1, 0, 0, -1})}); }
inline OrbifoldPtr r1_z2() { return orbifold(1, {orth(1, {-1})}); }

inline Poly x(const OrbifoldPtr& orb, std::size_t i) { return Poly::variable(orb->vars(), i); }
inline Poly c(const Variables& vars, long p, long q = 1) { return Poly(vars, ratio(p, q)); }

inline Monomial alpha(std::initializer_list<unsigned> e) { return Monomial(e); }

}  // namespace orbq::test

#pragma once

#include <cstddef>
#include <vector>

#include "orbq/algebra/poly.hpp"
#include "orbq/random.hpp"

// Hand-expanded quantization formulas for the projectively flat connections
// Gamma^k_ij = delta^k_i theta_j + delta^k_j theta_i on R^q, written with plain
// polynomial arithmetic. A coefficient choice is invariant when the operator
// built from theta agrees with the one built from theta = 0 on every sampled
// (theta, S, f).
namespace orbq::oracle {

struct Chart {
  std::size_t q;
  Variables vars;
  explicit Chart(std::size_t dim) : q(dim), vars(Variables::numbered("y", dim)) {}

  Poly zero() const { return Poly(vars); }
  Poly d(const Poly& f, std::size_t i) const { return f.derivative(i); }
};

inline Poly gamma(const Chart& c, const std::vector<Poly>& theta, std::size_t k, std::size_t i, std::size_t j) {
  Poly g = c.zero();
  if (k == i) g += theta[j];
  if (k == j) g += theta[i];
  return g;
}

inline std::vector<std::size_t> all_dirs(const Chart& c) {
  std::vector<std::size_t> v(c.q);
  for (std::size_t i = 0; i < c.q; ++i) v[i] = i;
  return v;
}

// S^i d_i f + coeff * (nabla_i S^i) f
inline Poly degree1(const Chart& c, const std::vector<Poly>& theta, const std::vector<Poly>& s, const Poly& f,
                    const Scalar& coeff) {
  Poly out = c.zero();
  Poly div = c.zero();
  for (std::size_t i = 0; i < c.q; ++i) {
    out += s[i] * c.d(f, i);
    div += c.d(s[i], i);
    for (std::size_t m = 0; m < c.q; ++m) div += gamma(c, theta, i, i, m) * s[m];
  }
  return out + coeff * (div * f);
}

// S^ij nabla_i nabla_j f + a (nabla_j S^ij) d_i f + b (nabla_i nabla_j S^ij) f
inline Poly degree2(const Chart& c, const std::vector<Poly>& theta, const std::vector<std::vector<Poly>>& s,
                    const Poly& f, const Scalar& a, const Scalar& b) {
  const std::size_t q = c.q;
  auto G = [&](std::size_t k, std::size_t i, std::size_t j) { return gamma(c, theta, k, i, j); };
  // T[i][j][k] = S^ij_;k
  std::vector<std::vector<std::vector<Poly>>> T(q, std::vector<std::vector<Poly>>(q, std::vector<Poly>(q, c.zero())));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        Poly t = c.d(s[i][j], k);
        for (std::size_t m = 0; m < q; ++m) t += G(i, k, m) * s[m][j] + G(j, k, m) * s[i][m];
        T[i][j][k] = t;
      }
  Poly out = c.zero();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Poly hess = c.d(c.d(f, i), j);
      for (std::size_t k = 0; k < q; ++k) hess -= G(k, i, j) * c.d(f, k);
      out += s[i][j] * hess;
    }
  for (std::size_t i = 0; i < q; ++i) {
    Poly div = c.zero();
    for (std::size_t j = 0; j < q; ++j) div += T[i][j][j];
    out += a * (div * c.d(f, i));
  }
  Poly dd = c.zero();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      // S^ij_;i;j
      Poly u = c.d(T[i][j][i], j);
      for (std::size_t m = 0; m < q; ++m)
        u += G(i, j, m) * T[m][j][i] + G(j, j, m) * T[i][m][i] - G(m, j, i) * T[i][j][m];
      dd += u;
    }
  return out + b * (dd * f);
}

inline std::vector<Poly> random_covector(const Chart& c, Rng& rng) {
  const auto dirs = all_dirs(c);
  std::vector<Poly> v;
  for (std::size_t i = 0; i < c.q; ++i) v.push_back(rng.poly(c.vars, dirs, 2));
  return v;
}

inline std::vector<std::vector<Poly>> random_sym2(const Chart& c, Rng& rng) {
  const auto dirs = all_dirs(c);
  std::vector<std::vector<Poly>> s(c.q, std::vector<Poly>(c.q, c.zero()));
  for (std::size_t i = 0; i < c.q; ++i)
    for (std::size_t j = i; j < c.q; ++j) s[i][j] = s[j][i] = rng.poly(c.vars, dirs, 2);
  return s;
}

inline bool degree1_invariant(std::size_t q, const Scalar& coeff, std::size_t samples, std::uint64_t seed) {
  const Chart c(q);
  Rng rng(seed);
  const std::vector<Poly> flat(q, c.zero());
  for (std::size_t t = 0; t < samples; ++t) {
    const auto theta = random_covector(c, rng);
    const auto s = random_covector(c, rng);
    const Poly f = rng.poly(c.vars, all_dirs(c), 3);
    if (degree1(c, theta, s, f, coeff) != degree1(c, flat, s, f, coeff)) return false;
  }
  return true;
}

inline bool degree2_invariant(std::size_t q, const Scalar& a, const Scalar& b, std::size_t samples,
                              std::uint64_t seed) {
  const Chart c(q);
  Rng rng(seed);
  const std::vector<Poly> flat(q, c.zero());
  for (std::size_t t = 0; t < samples; ++t) {
    const auto theta = random_covector(c, rng);
    const auto s = random_sym2(c, rng);
    const Poly f = rng.poly(c.vars, all_dirs(c), 3);
    if (degree2(c, theta, s, f, a, b) != degree2(c, flat, s, f, a, b)) return false;
  }
  return true;
}

}  // namespace orbq::oracle

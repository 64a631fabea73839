#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace orbq {

// Exponent vector. Also used as a derivative multi-index.
// Ordered graded-lexicographically: total degree first, then exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps.begin(), exps.end()) {
    for (auto e : exps_) degree_ += e;
  }
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  static Monomial unit(std::size_t nvars, std::size_t var) {
    Monomial m(nvars);
    m.exps_[var] = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  void set(std::size_t i, unsigned e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }
  void increment(std::size_t i) {
    ++exps_[i];
    ++degree_;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.degree_ += o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    r.degree_ -= o.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;
  }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

// All exponent vectors of length nvars with total degree exactly `degree`,
// in increasing order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

// All multi-indices beta <= alpha componentwise.
std::vector<Monomial> sub_indices(const Monomial& alpha);

}  // namespace orbq

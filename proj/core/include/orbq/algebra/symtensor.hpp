#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "orbq/algebra/diffop.hpp"

namespace orbq {

// Symmetric contravariant k-tensor S^{i1...ik} with polynomial entries along
// the active directions of a coordinate system. Stored once per index
// multiset, keyed by the multiplicity vector alpha (|alpha| = k).
class SymTensor {
 public:
  using ComponentMap = std::map<Monomial, Poly>;

  SymTensor(Coords coords, unsigned degree) : coords_(std::move(coords)), degree_(degree) {}

  const Coords& coords() const noexcept { return coords_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return coords_.dim(); }
  const ComponentMap& components() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  Poly component(std::span<const std::size_t> indices) const;
  Poly component(const Monomial& alpha) const;
  void set(std::span<const std::size_t> indices, const Poly& value);
  void set(const Monomial& alpha, const Poly& value);

  // sum over index tuples S^{i1..ik} d_i1 ... d_ik.
  DiffOp to_operator() const;
  // Symmetrized |alpha| = k coefficients of d. Requires order(d) <= k.
  static SymTensor leading(const DiffOp& d, unsigned k);

  // S contracted with k copies of the momentum variables.
  Poly contract(const Variables& symbol_vars) const;

  friend SymTensor operator+(const SymTensor& a, const SymTensor& b);
  friend SymTensor operator*(const Poly& f, const SymTensor& s);
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.coords_ == b.coords_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

 private:
  Monomial multiplicities(std::span<const std::size_t> indices) const;
  Coords coords_;
  unsigned degree_;
  ComponentMap comps_;
};

// Symbol-level bracket {P, Q} = sum_i dP/dxi_i dQ/dx_i - dP/dx_i dQ/dxi_i,
// the principal symbol of the commutator of operators with symbols P and Q.
SymTensor poisson_bracket(const SymTensor& p, const SymTensor& q);

// k! / alpha!
Scalar multinomial(const Monomial& alpha);

}  // namespace orbq

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "orbq/algebra/poly.hpp"

namespace orbq {

// A coordinate system: the ambient variables and the subset of them along
// which derivatives are taken (the "active" directions).
struct Coords {
  Variables vars;
  std::vector<std::size_t> active;

  static Coords all(const Variables& vars);
  std::size_t dim() const noexcept { return active.size(); }
  const std::string& name(std::size_t k) const { return vars[active[k]]; }
  friend bool operator==(const Coords& a, const Coords& b) { return a.vars == b.vars && a.active == b.active; }
};

// Linear differential operator sum_alpha D_alpha d^alpha with polynomial
// coefficients, derivatives along the active directions of its coordinates
// and written with all derivatives to the right.
class DiffOp {
 public:
  using CoeffMap = std::map<Monomial, Poly>;

  explicit DiffOp(Coords coords) : coords_(std::move(coords)) {}

  static DiffOp identity(const Coords& coords);
  static DiffOp multiplication(const Coords& coords, const Poly& f);
  // d/d(active direction k).
  static DiffOp partial(const Coords& coords, std::size_t k);

  const Coords& coords() const noexcept { return coords_; }
  const CoeffMap& coefficients() const noexcept { return coeffs_; }
  Poly coefficient(const Monomial& alpha) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Highest |alpha| with a nonzero coefficient; -1 for the zero operator.
  int order() const;

  void add_term(const Monomial& alpha, const Poly& coeff);

  Poly apply(const Poly& f) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  friend DiffOp operator*(const Poly& f, const DiffOp& d);
  friend DiffOp operator*(const Scalar& c, const DiffOp& d);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coords_ == b.coords_ && a.coeffs_ == b.coeffs_; }

  // d_k o D.
  DiffOp partial_then(std::size_t k) const;
  // Terms with |alpha| = k.
  DiffOp homogeneous_part(unsigned k) const;

  // Total symbol sum_alpha D_alpha xi^alpha over vars ++ {xi_k}.
  Poly total_symbol(const Variables& extended) const;
  static DiffOp from_total_symbol(const Coords& coords, const Poly& symbol);
  // vars ++ one momentum variable per active direction.
  Variables symbol_variables() const;

 private:
  void check_compatible(const DiffOp& o) const;
  Coords coords_;
  CoeffMap coeffs_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

}  // namespace orbq

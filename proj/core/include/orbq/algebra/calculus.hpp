#pragma once

#include <cstddef>
#include <vector>

#include "orbq/algebra/diffop.hpp"
#include "orbq/algebra/matrix.hpp"
#include "orbq/algebra/symtensor.hpp"

namespace orbq {

// Components along the active directions of a coordinate system, without any
// invariance requirement. The typed objects of the orbifold and foliated
// layers are validated wrappers around these.
using Components = std::vector<Poly>;

Components zero_components(const Coords& coords);

// X f = sum_k X^k d_k f.
Poly apply_field(const Coords& coords, const Components& x, const Poly& f);
// [X, Y]^j = sum_i X^i d_i Y^j - Y^i d_i X^j.
Components bracket(const Coords& coords, const Components& x, const Components& y);
// The splitting X -> sum_k X^k d_k (zero order-0 part).
DiffOp field_operator(const Coords& coords, const Components& x);
// Order-1 coefficients of an operator of order <= 1 with D1 = 0.
Components operator_field(const DiffOp& d);
// sum_k alpha_k X^k.
Poly pair(const Components& form, const Components& x);

// Torsion-free connection coefficients Gamma^k_{ij}, nabla_{d_i} d_j = Gamma^k_{ij} d_k.
class Christoffel {
 public:
  explicit Christoffel(const Coords& coords);

  std::size_t dim() const noexcept { return dim_; }
  const Variables& vars() const noexcept { return vars_; }
  const Poly& operator()(std::size_t k, std::size_t i, std::size_t j) const { return data_[(k * dim_ + i) * dim_ + j]; }
  Poly& operator()(std::size_t k, std::size_t i, std::size_t j) { return data_[(k * dim_ + i) * dim_ + j]; }
  // Sets Gamma^k_{ij} and Gamma^k_{ji}.
  void set_symmetric(std::size_t k, std::size_t i, std::size_t j, const Poly& value);

  bool symmetric() const;
  bool is_flat_table() const;
  // First (k, i, j) with Gamma^k_ij != Gamma^k_ji, if any.
  bool find_asymmetry(std::size_t& k, std::size_t& i, std::size_t& j) const;

  friend bool operator==(const Christoffel& a, const Christoffel& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  std::size_t dim_;
  Variables vars_;
  std::vector<Poly> data_;
};

// (nabla_X Y)^k = X^i d_i Y^k + Gamma^k_ij X^i Y^j.
Components covariant(const Coords& coords, const Christoffel& gamma, const Components& x, const Components& y);
// Gamma^k_ij + delta^k_i theta_j + delta^k_j theta_i.
Christoffel shift_projectively(const Christoffel& gamma, const Components& theta);

// x -> A x + b on the active directions; other variables are fixed.
struct AffineMap {
  Matrix linear;
  std::vector<Scalar> translation;

  static AffineMap identity(std::size_t n);
  std::size_t dim() const noexcept { return linear.rows(); }
  AffineMap inverse() const;
  // (this o other)(x) = this(other(x)).
  AffineMap after(const AffineMap& other) const;
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
};

// Pullbacks along the map T: f -> f o T, D -> (h -> D(h o T^-1) o T),
// vector fields through their operators, 1-forms and symbols tensorially, and
// connections through (T* nabla)_X Y = T*(nabla_{T^-1* X} T^-1* Y).
Poly pull_function(const Coords& coords, const AffineMap& t, const Poly& f);
DiffOp pull_operator(const AffineMap& t, const DiffOp& d);
Components pull_vector(const Coords& coords, const AffineMap& t, const Components& x);
Components pull_covector(const Coords& coords, const AffineMap& t, const Components& form);
SymTensor pull_symbol(const AffineMap& t, const SymTensor& s);
Christoffel pull_connection(const Coords& coords, const AffineMap& t, const Christoffel& gamma);

}  // namespace orbq

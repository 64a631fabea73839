#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>

#include "orbq/algebra/calculus.hpp"
#include "orbq/algebra/group.hpp"

namespace orbq {

inline constexpr unsigned kDefaultDegreeBound = 8;

// Global quotient R^n / Gamma with the Euclidean metric; Gamma is a finite
// subgroup of O(n), so its elements are automatically isometries. Singular
// objects are represented on the uniformizing chart R^n with coordinates
// x1..xn and are required to be Gamma-invariant there.
class Orbifold {
 public:
  explicit Orbifold(FiniteIsometryGroup group, unsigned degree_bound = kDefaultDegreeBound);

  std::size_t dim() const noexcept { return group_.dim(); }
  const FiniteIsometryGroup& group() const noexcept { return group_; }
  const Variables& vars() const noexcept { return coords_.vars; }
  const Coords& coords() const noexcept { return coords_; }
  unsigned degree_bound() const noexcept { return degree_bound_; }

  // x -> g x for the i-th group element.
  AffineMap action(std::size_t element) const;

  bool same_as(const Orbifold& other) const { return group_ == other.group_; }

 private:
  FiniteIsometryGroup group_;
  Coords coords_;
  unsigned degree_bound_;
};

using OrbifoldPtr = std::shared_ptr<const Orbifold>;

OrbifoldPtr make_orbifold(std::size_t dim, std::span<const OrthMatrix> generators,
                          std::size_t cap = kDefaultGroupCap, unsigned degree_bound = kDefaultDegreeBound);

// Functions Gamma-invariant on the chart. Construction validates invariance
// and throws InvarianceViolation naming the first offending group element.
class SingularFunction {
 public:
  SingularFunction(OrbifoldPtr orbifold, const Poly& rep);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const Poly& rep() const noexcept { return rep_; }
  friend bool operator==(const SingularFunction& a, const SingularFunction& b) { return a.rep_ == b.rep_; }

 private:
  OrbifoldPtr orb_;
  Poly rep_;
};

// sum_{|alpha| <= k} D_alpha d_x^alpha whose coefficient table is invariant
// under conjugation by every element of Gamma.
class SingularDiffOp {
 public:
  // order defaults to the operator's actual order (0 for the zero operator).
  SingularDiffOp(OrbifoldPtr orbifold, const DiffOp& op, std::optional<unsigned> order = std::nullopt);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const DiffOp& op() const noexcept { return op_; }
  unsigned order() const noexcept { return order_; }
  friend bool operator==(const SingularDiffOp& a, const SingularDiffOp& b) { return a.op_ == b.op_; }

 private:
  OrbifoldPtr orb_;
  DiffOp op_;
  unsigned order_;
};

// Symmetrized leading-coefficient tensor; Gamma-equivariant.
class SingularSymbol {
 public:
  SingularSymbol(OrbifoldPtr orbifold, const SymTensor& tensor);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const SymTensor& tensor() const noexcept { return tensor_; }
  unsigned degree() const noexcept { return tensor_.degree(); }
  friend bool operator==(const SingularSymbol& a, const SingularSymbol& b) { return a.tensor_ == b.tensor_; }

 private:
  OrbifoldPtr orb_;
  SymTensor tensor_;
};

// Stored through the splitting [D] -> D - D1: components X^j, X(gx) = g X(x).
class SingularVectorField {
 public:
  SingularVectorField(OrbifoldPtr orbifold, Components components);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const Components& components() const noexcept { return comps_; }
  friend bool operator==(const SingularVectorField& a, const SingularVectorField& b) { return a.comps_ == b.comps_; }

 private:
  OrbifoldPtr orb_;
  Components comps_;
};

class SingularOneForm {
 public:
  SingularOneForm(OrbifoldPtr orbifold, Components components);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const Components& components() const noexcept { return comps_; }
  friend bool operator==(const SingularOneForm& a, const SingularOneForm& b) { return a.comps_ == b.comps_; }

 private:
  OrbifoldPtr orb_;
  Components comps_;
};

// Torsion-free (symmetric) Christoffel table invariant under Gamma.
class SingularConnection {
 public:
  SingularConnection(OrbifoldPtr orbifold, Christoffel christoffel);
  static SingularConnection flat(OrbifoldPtr orbifold);
  const OrbifoldPtr& orbifold() const noexcept { return orb_; }
  const Christoffel& christoffel() const noexcept { return gamma_; }
  friend bool operator==(const SingularConnection& a, const SingularConnection& b) { return a.gamma_ == b.gamma_; }

 private:
  OrbifoldPtr orb_;
  Christoffel gamma_;
};

// Isometry V -> V' with Euclidean lift x -> A x + b. Valid when conjugation by
// A maps Gamma onto Gamma' and Gamma' fixes b, so the lift descends.
class LocalIsometry {
 public:
  LocalIsometry(OrbifoldPtr source, OrbifoldPtr target, AffineMap lift);
  static LocalIsometry identity(OrbifoldPtr orbifold);

  const OrbifoldPtr& source() const noexcept { return src_; }
  const OrbifoldPtr& target() const noexcept { return dst_; }
  const AffineMap& lift() const noexcept { return lift_; }
  // Index in the target group of A g_i A^-1 for each source element g_i.
  const std::vector<std::size_t>& group_morphism() const noexcept { return morphism_; }
  LocalIsometry inverse() const;

 private:
  OrbifoldPtr src_;
  OrbifoldPtr dst_;
  AffineMap lift_;
  std::vector<std::size_t> morphism_;
};

// Input factories: same validation as the constructors plus the per-orbifold
// polynomial degree bound.
SingularFunction make_function(const OrbifoldPtr& orbifold, const Poly& f);
SingularDiffOp make_diffop(const OrbifoldPtr& orbifold, const DiffOp& op, std::optional<unsigned> order = std::nullopt);
SingularSymbol make_symbol(const OrbifoldPtr& orbifold, const SymTensor& s);
SingularVectorField make_vector_field(const OrbifoldPtr& orbifold, const Components& x);
SingularOneForm make_one_form(const OrbifoldPtr& orbifold, const Components& a);
SingularConnection make_connection(const OrbifoldPtr& orbifold, const Christoffel& gamma);

// Averages over Gamma; the results are invariant.
Poly average_function(const Orbifold& orb, const Poly& f);
DiffOp average_operator(const Orbifold& orb, const DiffOp& d);
SymTensor average_symbol(const Orbifold& orb, const SymTensor& s);
Components average_vector(const Orbifold& orb, const Components& x);
Components average_covector(const Orbifold& orb, const Components& a);
Christoffel average_connection(const Orbifold& orb, const Christoffel& gamma);

SingularFunction operator*(const SingularFunction& f, const SingularFunction& g);
SingularFunction operator+(const SingularFunction& f, const SingularFunction& g);

SingularFunction apply_diffop(const SingularDiffOp& d, const SingularFunction& f);
SingularDiffOp compose(const SingularDiffOp& a, const SingularDiffOp& b);
// Order is checked to drop to order(a) + order(b) - 1.
SingularDiffOp commutator(const SingularDiffOp& a, const SingularDiffOp& b);
SingularSymbol symbol_of(const SingularDiffOp& d, unsigned k);
SingularSymbol symbol_bracket(const SingularSymbol& p, const SingularSymbol& q);
SingularDiffOp laplacian(const OrbifoldPtr& orbifold);

SingularDiffOp as_operator(const SingularVectorField& x);
SingularVectorField as_vector_field(const SingularSymbol& s);
SingularFunction apply_field(const SingularVectorField& x, const SingularFunction& f);
SingularVectorField scale(const SingularFunction& f, const SingularVectorField& x);
SingularVectorField vect_bracket(const SingularVectorField& x, const SingularVectorField& y);
SingularFunction pair(const SingularOneForm& a, const SingularVectorField& x);
SingularVectorField connection_apply(const SingularConnection& nabla, const SingularVectorField& x,
                                     const SingularVectorField& y);
SingularConnection projective_shift(const SingularConnection& nabla, const SingularOneForm& a);

// phi^*: objects on the target of phi pulled back to its source.
SingularFunction pullback(const LocalIsometry& phi, const SingularFunction& f);
SingularDiffOp pullback(const LocalIsometry& phi, const SingularDiffOp& d);
SingularSymbol pullback(const LocalIsometry& phi, const SingularSymbol& s);
SingularVectorField pullback(const LocalIsometry& phi, const SingularVectorField& x);
SingularOneForm pullback(const LocalIsometry& phi, const SingularOneForm& a);
SingularConnection pullback(const LocalIsometry& phi, const SingularConnection& nabla);

}  // namespace orbq

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "orbq/algebra/calculus.hpp"

namespace orbq {

// Adapted product chart R^p x R^q with leaf coordinates m1..mp and transverse
// coordinates y1..yq. Leaves are the slices y = const.
class FoliatedChart {
 public:
  FoliatedChart(std::size_t p, std::size_t q);

  std::size_t leaf_dim() const noexcept { return p_; }
  std::size_t transverse_dim() const noexcept { return q_; }
  const Variables& vars() const noexcept { return full_.vars; }
  // Coordinates (m, y) and the transverse directions y alone.
  const Coords& full() const noexcept { return full_; }
  const Coords& transverse() const noexcept { return transverse_; }

  // First leaf variable that f depends on.
  std::optional<std::string> leaf_dependence(const Poly& f) const;
  bool same_as(const FoliatedChart& other) const { return p_ == other.p_ && q_ == other.q_; }

 private:
  std::size_t p_;
  std::size_t q_;
  Coords full_;
  Coords transverse_;
};

using ChartPtr = std::shared_ptr<const FoliatedChart>;

ChartPtr make_chart(std::size_t p, std::size_t q);

// Depends on y only. Throws NotFoliated naming the leaf variable otherwise.
class FoliatedFunction {
 public:
  FoliatedFunction(ChartPtr chart, const Poly& rep);
  const ChartPtr& chart() const noexcept { return chart_; }
  const Poly& rep() const noexcept { return rep_; }
  friend bool operator==(const FoliatedFunction& a, const FoliatedFunction& b) { return a.rep_ == b.rep_; }

 private:
  ChartPtr chart_;
  Poly rep_;
};

// sum_{|alpha| <= k} D_alpha d_y^alpha with foliated coefficients.
class FoliatedDiffOp {
 public:
  FoliatedDiffOp(ChartPtr chart, const DiffOp& op, std::optional<unsigned> order = std::nullopt);
  const ChartPtr& chart() const noexcept { return chart_; }
  const DiffOp& op() const noexcept { return op_; }
  unsigned order() const noexcept { return order_; }
  friend bool operator==(const FoliatedDiffOp& a, const FoliatedDiffOp& b) { return a.op_ == b.op_; }

 private:
  ChartPtr chart_;
  DiffOp op_;
  unsigned order_;
};

// Leading tensor of a foliated operator, in the transverse directions.
class FoliatedSymbol {
 public:
  FoliatedSymbol(ChartPtr chart, const SymTensor& tensor);
  const ChartPtr& chart() const noexcept { return chart_; }
  const SymTensor& tensor() const noexcept { return tensor_; }
  unsigned degree() const noexcept { return tensor_.degree(); }
  friend bool operator==(const FoliatedSymbol& a, const FoliatedSymbol& b) { return a.tensor_ == b.tensor_; }

 private:
  ChartPtr chart_;
  SymTensor tensor_;
};

// Leafwise part A^a(m, y) and transverse part X^i(y). Transverse components
// independent of m is the product-chart form of [X, Gamma(TF)] in Gamma(TF).
class AdaptedVectorField {
 public:
  AdaptedVectorField(ChartPtr chart, Components leafwise, Components transverse);
  static AdaptedVectorField leafwise(ChartPtr chart, Components leafwise);

  const ChartPtr& chart() const noexcept { return chart_; }
  const Components& leaf_part() const noexcept { return leaf_; }
  const Components& transverse_part() const noexcept { return trans_; }
  // (A^1..A^p, X^1..X^q) along the full coordinates.
  Components full_components() const;
  bool is_leafwise() const;
  friend bool operator==(const AdaptedVectorField& a, const AdaptedVectorField& b) {
    return a.leaf_ == b.leaf_ && a.trans_ == b.trans_;
  }

 private:
  ChartPtr chart_;
  Components leaf_;
  Components trans_;
};

// Class in Vect_F / Gamma(TF), represented with zero leafwise part.
class FoliatedVectorField {
 public:
  FoliatedVectorField(ChartPtr chart, Components transverse);
  const ChartPtr& chart() const noexcept { return chart_; }
  const Components& components() const noexcept { return comps_; }
  friend bool operator==(const FoliatedVectorField& a, const FoliatedVectorField& b) { return a.comps_ == b.comps_; }

 private:
  ChartPtr chart_;
  Components comps_;
};

// theta = sum theta_i(y) dy^i.
class FoliatedOneForm {
 public:
  FoliatedOneForm(ChartPtr chart, Components transverse);
  // From all p + q components; checks the syntactic conditions (no dm part,
  // y-components free of m).
  static FoliatedOneForm from_full(ChartPtr chart, const Components& full);

  const ChartPtr& chart() const noexcept { return chart_; }
  const Components& components() const noexcept { return comps_; }
  Components full_components() const;
  friend bool operator==(const FoliatedOneForm& a, const FoliatedOneForm& b) { return a.comps_ == b.comps_; }

 private:
  ChartPtr chart_;
  Components comps_;
};

// Symmetric transverse Christoffel table depending on y only.
class FoliatedConnection {
 public:
  FoliatedConnection(ChartPtr chart, Christoffel christoffel);
  static FoliatedConnection flat(ChartPtr chart);
  const ChartPtr& chart() const noexcept { return chart_; }
  const Christoffel& christoffel() const noexcept { return gamma_; }
  friend bool operator==(const FoliatedConnection& a, const FoliatedConnection& b) { return a.gamma_ == b.gamma_; }

 private:
  ChartPtr chart_;
  Christoffel gamma_;
};

FoliatedFunction make_foliated_function(const ChartPtr& chart, const Poly& f);

FoliatedFunction operator*(const FoliatedFunction& f, const FoliatedFunction& g);
FoliatedFunction operator+(const FoliatedFunction& f, const FoliatedFunction& g);
FoliatedFunction apply_diffop(const FoliatedDiffOp& d, const FoliatedFunction& f);
FoliatedDiffOp compose(const FoliatedDiffOp& a, const FoliatedDiffOp& b);
FoliatedDiffOp commutator(const FoliatedDiffOp& a, const FoliatedDiffOp& b);
FoliatedSymbol symbol_of(const FoliatedDiffOp& d, unsigned k);

FoliatedVectorField foliated_class(const AdaptedVectorField& x);
// Bracket of the full fields on R^p x R^q.
AdaptedVectorField adapted_bracket(const AdaptedVectorField& x, const AdaptedVectorField& y);
FoliatedVectorField foliated_bracket(const FoliatedVectorField& x, const FoliatedVectorField& y);

// The isomorphism of foliated vector fields with order-1 foliated operators
// without order-0 part.
FoliatedDiffOp as_operator(const FoliatedVectorField& x);
FoliatedVectorField as_vector_field(const FoliatedDiffOp& d);
FoliatedVectorField as_vector_field(const FoliatedSymbol& s);
FoliatedSymbol as_symbol(const FoliatedVectorField& x);

FoliatedFunction apply_field(const FoliatedVectorField& x, const FoliatedFunction& f);
FoliatedVectorField scale(const FoliatedFunction& f, const FoliatedVectorField& x);
FoliatedFunction pair(const FoliatedOneForm& theta, const FoliatedVectorField& x);

FoliatedVectorField foliated_connection_apply(const FoliatedConnection& nabla, const FoliatedVectorField& x,
                                              const FoliatedVectorField& y);
FoliatedConnection foliated_projective_shift(const FoliatedConnection& nabla, const FoliatedOneForm& theta);

// Raw 1-forms on the full chart. i_Y theta and the components of i_Y d theta
// for a field Y given by full components.
Poly interior(const Components& y, const Components& form);
Components interior_differential(const Coords& coords, const Components& y, const Components& form);
// The defining conditions i_Y theta = i_Y d theta = 0 tested on the leafwise
// frame d_m1..d_mp, which suffices by C-linearity in Y.
bool satisfies_foliated_conditions(const FoliatedChart& chart, const Components& form);
// No dm part and y-components free of m.
bool is_syntactically_foliated(const FoliatedChart& chart, const Components& form);

}  // namespace orbq

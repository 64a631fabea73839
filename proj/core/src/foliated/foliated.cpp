#include "orbq/foliated/foliated.hpp"

#include <numeric>

#include "orbq/errors.hpp"

namespace orbq {

namespace {

Variables chart_variables(std::size_t p, std::size_t q) {
  return Variables::numbered("m", p).concat(Variables::numbered("y", q));
}

void require_same(const ChartPtr& a, const ChartPtr& b) {
  if (a != b && !a->same_as(*b)) throw DimensionMismatch("objects live on different foliated charts");
}

void require_foliated(const FoliatedChart& chart, const Poly& f, const std::string& what) {
  if (auto var = chart.leaf_dependence(f)) {
    throw NotFoliated(what + " depends on the leaf variable " + *var, f.to_string());
  }
}

Components over(const FoliatedChart& chart, const Components& c, std::size_t expected, const char* what) {
  if (c.size() != expected) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(expected) + " components, got " +
                            std::to_string(c.size()));
  }
  Components out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(p.over(chart.vars()));
  return out;
}

void require_foliated(const FoliatedChart& chart, const Components& c, const std::string& what) {
  for (std::size_t i = 0; i < c.size(); ++i) require_foliated(chart, c[i], what + " component " + std::to_string(i + 1));
}

}  // namespace

FoliatedChart::FoliatedChart(std::size_t p, std::size_t q)
    : p_(p), q_(q), full_(Coords::all(chart_variables(p, q))), transverse_{full_.vars, {}} {
  if (q == 0) throw DimensionMismatch("a foliated chart needs at least one transverse direction");
  transverse_.active.resize(q);
  std::iota(transverse_.active.begin(), transverse_.active.end(), p);
}

std::optional<std::string> FoliatedChart::leaf_dependence(const Poly& f) const {
  const Poly g = f.over(vars());
  for (std::size_t a = 0; a < p_; ++a)
    if (g.depends_on(a)) return vars()[a];
  return std::nullopt;
}

ChartPtr make_chart(std::size_t p, std::size_t q) { return std::make_shared<const FoliatedChart>(p, q); }

FoliatedFunction::FoliatedFunction(ChartPtr chart, const Poly& rep)
    : chart_(std::move(chart)), rep_(rep.over(chart_->vars())) {
  require_foliated(*chart_, rep_, "function");
}

FoliatedDiffOp::FoliatedDiffOp(ChartPtr chart, const DiffOp& op, std::optional<unsigned> order)
    : chart_(std::move(chart)), op_(op) {
  if (!(op_.coords() == chart_->transverse()))
    throw DimensionMismatch("foliated operators differentiate along the transverse directions only");
  for (const auto& [alpha, c] : op_.coefficients()) require_foliated(*chart_, c, "operator coefficient");
  const int actual = op_.order();
  order_ = order.value_or(actual < 0 ? 0u : static_cast<unsigned>(actual));
  if (actual > static_cast<int>(order_)) {
    throw OrderError("operator has order " + std::to_string(actual) + " above declared order " +
                     std::to_string(order_));
  }
}

FoliatedSymbol::FoliatedSymbol(ChartPtr chart, const SymTensor& tensor) : chart_(std::move(chart)), tensor_(tensor) {
  if (!(tensor_.coords() == chart_->transverse()))
    throw DimensionMismatch("foliated symbols live on the transverse directions");
  for (const auto& [alpha, c] : tensor_.components()) require_foliated(*chart_, c, "symbol component");
}

AdaptedVectorField::AdaptedVectorField(ChartPtr chart, Components leafwise, Components transverse)
    : chart_(std::move(chart)),
      leaf_(over(*chart_, leafwise, chart_->leaf_dim(), "leafwise part")),
      trans_(over(*chart_, transverse, chart_->transverse_dim(), "transverse part")) {
  require_foliated(*chart_, trans_, "adapted field transverse");
}

AdaptedVectorField AdaptedVectorField::leafwise(ChartPtr chart, Components leafwise) {
  Components zero(chart->transverse_dim(), Poly(chart->vars()));
  return AdaptedVectorField(std::move(chart), std::move(leafwise), std::move(zero));
}

Components AdaptedVectorField::full_components() const {
  Components out = leaf_;
  out.insert(out.end(), trans_.begin(), trans_.end());
  return out;
}

bool AdaptedVectorField::is_leafwise() const {
  for (const auto& c : trans_)
    if (!c.is_zero()) return false;
  return true;
}

FoliatedVectorField::FoliatedVectorField(ChartPtr chart, Components transverse)
    : chart_(std::move(chart)), comps_(over(*chart_, transverse, chart_->transverse_dim(), "foliated vector field")) {
  require_foliated(*chart_, comps_, "foliated vector field");
}

FoliatedOneForm::FoliatedOneForm(ChartPtr chart, Components transverse)
    : chart_(std::move(chart)), comps_(over(*chart_, transverse, chart_->transverse_dim(), "foliated 1-form")) {
  require_foliated(*chart_, comps_, "foliated 1-form");
}

FoliatedOneForm FoliatedOneForm::from_full(ChartPtr chart, const Components& full) {
  const std::size_t p = chart->leaf_dim();
  const Components c = over(*chart, full, p + chart->transverse_dim(), "1-form");
  for (std::size_t a = 0; a < p; ++a) {
    if (!c[a].is_zero())
      throw NotFoliated("1-form has a nonzero leafwise component d" + chart->vars()[a], c[a].to_string());
  }
  return FoliatedOneForm(std::move(chart), Components(c.begin() + static_cast<std::ptrdiff_t>(p), c.end()));
}

Components FoliatedOneForm::full_components() const {
  Components out(chart_->leaf_dim(), Poly(chart_->vars()));
  out.insert(out.end(), comps_.begin(), comps_.end());
  return out;
}

FoliatedConnection::FoliatedConnection(ChartPtr chart, Christoffel christoffel)
    : chart_(std::move(chart)), gamma_(std::move(christoffel)) {
  if (gamma_.dim() != chart_->transverse_dim() || !(gamma_.vars() == chart_->vars()))
    throw DimensionMismatch("connection is not expressed on the transverse directions of the chart");
  std::size_t k, i, j;
  if (gamma_.find_asymmetry(k, i, j)) {
    throw ValidationError("foliated connection has torsion at Gamma^" + std::to_string(k + 1) + "_" +
                          std::to_string(i + 1) + std::to_string(j + 1));
  }
  const std::size_t q = gamma_.dim();
  for (k = 0; k < q; ++k)
    for (i = 0; i < q; ++i)
      for (j = 0; j < q; ++j)
        require_foliated(*chart_, gamma_(k, i, j),
                         "Christoffel symbol " + std::to_string(k + 1) + "," + std::to_string(i + 1) + "," +
                             std::to_string(j + 1));
}

FoliatedConnection FoliatedConnection::flat(ChartPtr chart) {
  Christoffel zero(chart->transverse());
  return FoliatedConnection(std::move(chart), std::move(zero));
}

FoliatedFunction make_foliated_function(const ChartPtr& chart, const Poly& f) { return FoliatedFunction(chart, f); }

FoliatedFunction operator*(const FoliatedFunction& f, const FoliatedFunction& g) {
  require_same(f.chart(), g.chart());
  return FoliatedFunction(f.chart(), f.rep() * g.rep());
}

FoliatedFunction operator+(const FoliatedFunction& f, const FoliatedFunction& g) {
  require_same(f.chart(), g.chart());
  return FoliatedFunction(f.chart(), f.rep() + g.rep());
}

FoliatedFunction apply_diffop(const FoliatedDiffOp& d, const FoliatedFunction& f) {
  require_same(d.chart(), f.chart());
  return FoliatedFunction(d.chart(), d.op().apply(f.rep()));
}

FoliatedDiffOp compose(const FoliatedDiffOp& a, const FoliatedDiffOp& b) {
  require_same(a.chart(), b.chart());
  return FoliatedDiffOp(a.chart(), compose(a.op(), b.op()), a.order() + b.order());
}

FoliatedDiffOp commutator(const FoliatedDiffOp& a, const FoliatedDiffOp& b) {
  require_same(a.chart(), b.chart());
  const unsigned bound = a.order() + b.order() == 0 ? 0 : a.order() + b.order() - 1;
  DiffOp c = commutator(a.op(), b.op());
  if (c.order() > static_cast<int>(bound))
    throw std::logic_error("commutator order did not drop: got " + std::to_string(c.order()));
  return FoliatedDiffOp(a.chart(), c, bound);
}

FoliatedSymbol symbol_of(const FoliatedDiffOp& d, unsigned k) {
  if (d.op().order() > static_cast<int>(k)) {
    throw OrderError("requested symbol degree " + std::to_string(k) + " is below operator order " +
                     std::to_string(d.op().order()));
  }
  return FoliatedSymbol(d.chart(), SymTensor::leading(d.op(), k));
}

FoliatedVectorField foliated_class(const AdaptedVectorField& x) {
  return FoliatedVectorField(x.chart(), x.transverse_part());
}

AdaptedVectorField adapted_bracket(const AdaptedVectorField& x, const AdaptedVectorField& y) {
  require_same(x.chart(), y.chart());
  const Components b = bracket(x.chart()->full(), x.full_components(), y.full_components());
  const auto p = static_cast<std::ptrdiff_t>(x.chart()->leaf_dim());
  return AdaptedVectorField(x.chart(), Components(b.begin(), b.begin() + p), Components(b.begin() + p, b.end()));
}

FoliatedVectorField foliated_bracket(const FoliatedVectorField& x, const FoliatedVectorField& y) {
  require_same(x.chart(), y.chart());
  return FoliatedVectorField(x.chart(), bracket(x.chart()->transverse(), x.components(), y.components()));
}

FoliatedDiffOp as_operator(const FoliatedVectorField& x) {
  return FoliatedDiffOp(x.chart(), field_operator(x.chart()->transverse(), x.components()), 1);
}

FoliatedVectorField as_vector_field(const FoliatedDiffOp& d) {
  return FoliatedVectorField(d.chart(), operator_field(d.op()));
}

FoliatedVectorField as_vector_field(const FoliatedSymbol& s) {
  if (s.degree() != 1) throw UnsupportedDegree("only degree-1 symbols are vector fields");
  return FoliatedVectorField(s.chart(), operator_field(s.tensor().to_operator()));
}

FoliatedSymbol as_symbol(const FoliatedVectorField& x) {
  SymTensor s(x.chart()->transverse(), 1);
  for (std::size_t i = 0; i < x.components().size(); ++i) {
    const std::size_t idx[1] = {i};
    s.set(idx, x.components()[i]);
  }
  return FoliatedSymbol(x.chart(), s);
}

FoliatedFunction apply_field(const FoliatedVectorField& x, const FoliatedFunction& f) {
  require_same(x.chart(), f.chart());
  return FoliatedFunction(x.chart(), orbq::apply_field(x.chart()->transverse(), x.components(), f.rep()));
}

FoliatedVectorField scale(const FoliatedFunction& f, const FoliatedVectorField& x) {
  require_same(x.chart(), f.chart());
  Components c = x.components();
  for (auto& p : c) p = f.rep() * p;
  return FoliatedVectorField(x.chart(), std::move(c));
}

FoliatedFunction pair(const FoliatedOneForm& theta, const FoliatedVectorField& x) {
  require_same(theta.chart(), x.chart());
  return FoliatedFunction(x.chart(), orbq::pair(theta.components(), x.components()));
}

FoliatedVectorField foliated_connection_apply(const FoliatedConnection& nabla, const FoliatedVectorField& x,
                                              const FoliatedVectorField& y) {
  require_same(nabla.chart(), x.chart());
  require_same(nabla.chart(), y.chart());
  return FoliatedVectorField(nabla.chart(),
                             covariant(nabla.chart()->transverse(), nabla.christoffel(), x.components(), y.components()));
}

FoliatedConnection foliated_projective_shift(const FoliatedConnection& nabla, const FoliatedOneForm& theta) {
  require_same(nabla.chart(), theta.chart());
  return FoliatedConnection(nabla.chart(), shift_projectively(nabla.christoffel(), theta.components()));
}

Poly interior(const Components& y, const Components& form) { return orbq::pair(form, y); }

Components interior_differential(const Coords& coords, const Components& y, const Components& form) {
  // (i_Y d theta)_j = sum_i Y^i (d_i theta_j - d_j theta_i).
  const std::size_t n = coords.dim();
  if (y.size() != n || form.size() != n) throw DimensionMismatch("interior product: component count mismatch");
  Components out = zero_components(coords);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i].is_zero()) continue;
      out[j] += y[i].over(coords.vars) * (form[j].over(coords.vars).derivative(coords.active[i]) -
                                          form[i].over(coords.vars).derivative(coords.active[j]));
    }
  }
  return out;
}

bool satisfies_foliated_conditions(const FoliatedChart& chart, const Components& form) {
  const Coords& full = chart.full();
  for (std::size_t a = 0; a < chart.leaf_dim(); ++a) {
    Components y = zero_components(full);
    y[a] = Poly(full.vars, Scalar(1));
    if (!interior(y, form).is_zero()) return false;
    for (const auto& c : interior_differential(full, y, form))
      if (!c.is_zero()) return false;
  }
  return true;
}

bool is_syntactically_foliated(const FoliatedChart& chart, const Components& form) {
  const std::size_t p = chart.leaf_dim();
  if (form.size() != p + chart.transverse_dim()) throw DimensionMismatch("1-form: component count mismatch");
  for (std::size_t a = 0; a < p; ++a)
    if (!form[a].is_zero()) return false;
  for (std::size_t i = p; i < form.size(); ++i)
    if (chart.leaf_dependence(form[i])) return false;
  return true;
}

}  // namespace orbq

#include "orbq/orbifold/orbifold.hpp"

#include "orbq/errors.hpp"

namespace orbq {

namespace {

template <class T, class Pull>
void check_invariant(const Orbifold& orb, const T& value, Pull pull, const char* what) {
  for (std::size_t i = 1; i < orb.group().order(); ++i) {
    if (!(pull(orb.action(i), value) == value)) {
      throw InvarianceViolation(std::string(what) + " is not invariant under the orbifold group",
                                orb.group().elements()[i].matrix().to_string());
    }
  }
}

Components add(const Components& a, const Components& b) {
  Components out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Components scaled(const Scalar& w, const Components& a) {
  Components out = a;
  for (auto& p : out) p *= w;
  return out;
}

void require_same(const OrbifoldPtr& a, const OrbifoldPtr& b) {
  if (a != b && !a->same_as(*b)) throw DimensionMismatch("objects live on different orbifolds");
}

void require_coords(const Orbifold& orb, const Coords& c) {
  if (!(c == orb.coords())) throw DimensionMismatch("object is not expressed in the orbifold coordinates");
}

Components over(const Orbifold& orb, const Components& c) {
  if (c.size() != orb.dim()) throw DimensionMismatch("component count differs from orbifold dimension");
  Components out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(p.over(orb.vars()));
  return out;
}

void check_degree(const Orbifold& orb, const Poly& p, const char* what) {
  if (p.total_degree() > static_cast<int>(orb.degree_bound())) {
    throw ValidationError(std::string(what) + " exceeds the polynomial degree bound " +
                              std::to_string(orb.degree_bound()),
                          p.to_string());
  }
}

}  // namespace

Orbifold::Orbifold(FiniteIsometryGroup group, unsigned degree_bound)
    : group_(std::move(group)), coords_(Coords::all(Variables::numbered("x", group_.dim()))),
      degree_bound_(degree_bound) {}

AffineMap Orbifold::action(std::size_t element) const {
  return AffineMap{group_.elements().at(element).matrix(), std::vector<Scalar>(dim())};
}

OrbifoldPtr make_orbifold(std::size_t dim, std::span<const OrthMatrix> generators, std::size_t cap,
                          unsigned degree_bound) {
  return std::make_shared<const Orbifold>(generate_group(dim, generators, cap), degree_bound);
}

SingularFunction::SingularFunction(OrbifoldPtr orbifold, const Poly& rep)
    : orb_(std::move(orbifold)), rep_(rep.over(orb_->vars())) {
  check_invariant(*orb_, rep_, [&](const AffineMap& t, const Poly& f) { return pull_function(orb_->coords(), t, f); },
                  "function");
}

SingularDiffOp::SingularDiffOp(OrbifoldPtr orbifold, const DiffOp& op, std::optional<unsigned> order)
    : orb_(std::move(orbifold)), op_(op) {
  require_coords(*orb_, op_.coords());
  const int actual = op_.order();
  order_ = order.value_or(actual < 0 ? 0u : static_cast<unsigned>(actual));
  if (actual > static_cast<int>(order_)) {
    throw OrderError("operator has order " + std::to_string(actual) + " above declared order " +
                     std::to_string(order_));
  }
  check_invariant(*orb_, op_, [](const AffineMap& t, const DiffOp& d) { return pull_operator(t, d); }, "operator");
}

SingularSymbol::SingularSymbol(OrbifoldPtr orbifold, const SymTensor& tensor)
    : orb_(std::move(orbifold)), tensor_(tensor) {
  require_coords(*orb_, tensor_.coords());
  check_invariant(*orb_, tensor_, [](const AffineMap& t, const SymTensor& s) { return pull_symbol(t, s); },
                  "symbol");
}

SingularVectorField::SingularVectorField(OrbifoldPtr orbifold, Components components)
    : orb_(std::move(orbifold)), comps_(over(*orb_, components)) {
  check_invariant(*orb_, comps_,
                  [&](const AffineMap& t, const Components& x) { return pull_vector(orb_->coords(), t, x); },
                  "vector field");
}

SingularOneForm::SingularOneForm(OrbifoldPtr orbifold, Components components)
    : orb_(std::move(orbifold)), comps_(over(*orb_, components)) {
  check_invariant(*orb_, comps_,
                  [&](const AffineMap& t, const Components& a) { return pull_covector(orb_->coords(), t, a); },
                  "1-form");
}

SingularConnection::SingularConnection(OrbifoldPtr orbifold, Christoffel christoffel)
    : orb_(std::move(orbifold)), gamma_(std::move(christoffel)) {
  if (gamma_.dim() != orb_->dim() || !(gamma_.vars() == orb_->vars()))
    throw DimensionMismatch("connection is not expressed in the orbifold coordinates");
  std::size_t k, i, j;
  if (gamma_.find_asymmetry(k, i, j)) {
    throw ValidationError("connection has torsion: Gamma^" + std::to_string(k + 1) + "_" + std::to_string(i + 1) +
                          std::to_string(j + 1) + " != Gamma^" + std::to_string(k + 1) + "_" +
                          std::to_string(j + 1) + std::to_string(i + 1));
  }
  check_invariant(*orb_, gamma_,
                  [&](const AffineMap& t, const Christoffel& g) { return pull_connection(orb_->coords(), t, g); },
                  "connection");
}

SingularConnection SingularConnection::flat(OrbifoldPtr orbifold) {
  Christoffel zero(orbifold->coords());
  return SingularConnection(std::move(orbifold), std::move(zero));
}

LocalIsometry::LocalIsometry(OrbifoldPtr source, OrbifoldPtr target, AffineMap lift)
    : src_(std::move(source)), dst_(std::move(target)), lift_(std::move(lift)) {
  const std::size_t n = src_->dim();
  if (dst_->dim() != n || lift_.dim() != n || lift_.translation.size() != n)
    throw DimensionMismatch("isometry dimensions do not match");
  if (!is_orthogonal(lift_.linear))
    throw InvalidIsometry("lift is not a Euclidean isometry", lift_.linear.to_string());
  const OrthMatrix a(lift_.linear);
  const OrthMatrix a_inv = a.inverse();
  if (src_->group().order() != dst_->group().order())
    throw InvalidIsometry("source and target groups have different orders");
  for (const auto& g : src_->group().elements()) {
    const OrthMatrix conj = a * g * a_inv;
    const auto idx = dst_->group().index_of(conj);
    if (!idx) throw InvalidIsometry("conjugated group element is not in the target group", conj.matrix().to_string());
    morphism_.push_back(*idx);
  }
  for (const auto& g : dst_->group().elements()) {
    if (g.matrix().apply(lift_.translation) != lift_.translation)
      throw InvalidIsometry("translation is not fixed by the target group", g.matrix().to_string());
  }
}

LocalIsometry LocalIsometry::identity(OrbifoldPtr orbifold) {
  const std::size_t n = orbifold->dim();
  return LocalIsometry(orbifold, orbifold, AffineMap::identity(n));
}

LocalIsometry LocalIsometry::inverse() const { return LocalIsometry(dst_, src_, lift_.inverse()); }

SingularFunction make_function(const OrbifoldPtr& orbifold, const Poly& f) {
  check_degree(*orbifold, f, "function");
  return SingularFunction(orbifold, f);
}

SingularDiffOp make_diffop(const OrbifoldPtr& orbifold, const DiffOp& op, std::optional<unsigned> order) {
  for (const auto& [alpha, c] : op.coefficients()) check_degree(*orbifold, c, "operator coefficient");
  return SingularDiffOp(orbifold, op, order);
}

SingularSymbol make_symbol(const OrbifoldPtr& orbifold, const SymTensor& s) {
  for (const auto& [alpha, c] : s.components()) check_degree(*orbifold, c, "symbol component");
  return SingularSymbol(orbifold, s);
}

SingularVectorField make_vector_field(const OrbifoldPtr& orbifold, const Components& x) {
  for (const auto& c : x) check_degree(*orbifold, c, "vector field component");
  return SingularVectorField(orbifold, x);
}

SingularOneForm make_one_form(const OrbifoldPtr& orbifold, const Components& a) {
  for (const auto& c : a) check_degree(*orbifold, c, "1-form component");
  return SingularOneForm(orbifold, a);
}

SingularConnection make_connection(const OrbifoldPtr& orbifold, const Christoffel& gamma) {
  for (std::size_t k = 0; k < gamma.dim(); ++k)
    for (std::size_t i = 0; i < gamma.dim(); ++i)
      for (std::size_t j = 0; j < gamma.dim(); ++j) check_degree(*orbifold, gamma(k, i, j), "Christoffel symbol");
  return SingularConnection(orbifold, gamma);
}

Poly average_function(const Orbifold& orb, const Poly& f) {
  const Poly g = f.over(orb.vars());
  Poly sum(orb.vars());
  for (std::size_t i = 0; i < orb.group().order(); ++i) sum += pull_function(orb.coords(), orb.action(i), g);
  sum *= ratio(1, static_cast<long>(orb.group().order()));
  return sum;
}

DiffOp average_operator(const Orbifold& orb, const DiffOp& d) {
  DiffOp sum(d.coords());
  for (std::size_t i = 0; i < orb.group().order(); ++i) sum += pull_operator(orb.action(i), d);
  return ratio(1, static_cast<long>(orb.group().order())) * sum;
}

SymTensor average_symbol(const Orbifold& orb, const SymTensor& s) {
  SymTensor sum(s.coords(), s.degree());
  for (std::size_t i = 0; i < orb.group().order(); ++i) sum = sum + pull_symbol(orb.action(i), s);
  return Poly(orb.vars(), ratio(1, static_cast<long>(orb.group().order()))) * sum;
}

Components average_vector(const Orbifold& orb, const Components& x) {
  Components sum = zero_components(orb.coords());
  for (std::size_t i = 0; i < orb.group().order(); ++i) sum = add(sum, pull_vector(orb.coords(), orb.action(i), x));
  return scaled(ratio(1, static_cast<long>(orb.group().order())), sum);
}

Components average_covector(const Orbifold& orb, const Components& a) {
  Components sum = zero_components(orb.coords());
  for (std::size_t i = 0; i < orb.group().order(); ++i)
    sum = add(sum, pull_covector(orb.coords(), orb.action(i), a));
  return scaled(ratio(1, static_cast<long>(orb.group().order())), sum);
}

Christoffel average_connection(const Orbifold& orb, const Christoffel& gamma) {
  const std::size_t n = orb.dim();
  Christoffel sum(orb.coords());
  for (std::size_t e = 0; e < orb.group().order(); ++e) {
    const Christoffel p = pull_connection(orb.coords(), orb.action(e), gamma);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum(k, i, j) += p(k, i, j);
  }
  const Scalar w = ratio(1, static_cast<long>(orb.group().order()));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum(k, i, j) *= w;
  return sum;
}

SingularFunction operator*(const SingularFunction& f, const SingularFunction& g) {
  require_same(f.orbifold(), g.orbifold());
  return SingularFunction(f.orbifold(), f.rep() * g.rep());
}

SingularFunction operator+(const SingularFunction& f, const SingularFunction& g) {
  require_same(f.orbifold(), g.orbifold());
  return SingularFunction(f.orbifold(), f.rep() + g.rep());
}

SingularFunction apply_diffop(const SingularDiffOp& d, const SingularFunction& f) {
  require_same(d.orbifold(), f.orbifold());
  return SingularFunction(d.orbifold(), d.op().apply(f.rep()));
}

SingularDiffOp compose(const SingularDiffOp& a, const SingularDiffOp& b) {
  require_same(a.orbifold(), b.orbifold());
  return SingularDiffOp(a.orbifold(), compose(a.op(), b.op()), a.order() + b.order());
}

SingularDiffOp commutator(const SingularDiffOp& a, const SingularDiffOp& b) {
  require_same(a.orbifold(), b.orbifold());
  const unsigned bound = a.order() + b.order() == 0 ? 0 : a.order() + b.order() - 1;
  DiffOp c = commutator(a.op(), b.op());
  if (c.order() > static_cast<int>(bound))
    throw std::logic_error("commutator order did not drop: got " + std::to_string(c.order()));
  return SingularDiffOp(a.orbifold(), c, bound);
}

SingularSymbol symbol_of(const SingularDiffOp& d, unsigned k) {
  if (d.op().order() > static_cast<int>(k)) {
    throw OrderError("requested symbol degree " + std::to_string(k) + " is below operator order " +
                     std::to_string(d.op().order()));
  }
  return SingularSymbol(d.orbifold(), SymTensor::leading(d.op(), k));
}

SingularSymbol symbol_bracket(const SingularSymbol& p, const SingularSymbol& q) {
  require_same(p.orbifold(), q.orbifold());
  return SingularSymbol(p.orbifold(), poisson_bracket(p.tensor(), q.tensor()));
}

SingularDiffOp laplacian(const OrbifoldPtr& orbifold) {
  DiffOp d(orbifold->coords());
  for (std::size_t i = 0; i < orbifold->dim(); ++i) {
    Monomial alpha(orbifold->dim());
    alpha.set(i, 2);
    d.add_term(alpha, Poly(orbifold->vars(), Scalar(1)));
  }
  return SingularDiffOp(orbifold, d, 2);
}

SingularDiffOp as_operator(const SingularVectorField& x) {
  return SingularDiffOp(x.orbifold(), field_operator(x.orbifold()->coords(), x.components()), 1);
}

SingularVectorField as_vector_field(const SingularSymbol& s) {
  if (s.degree() != 1) throw UnsupportedDegree("only degree-1 symbols are vector fields");
  return SingularVectorField(s.orbifold(), operator_field(s.tensor().to_operator()));
}

SingularFunction apply_field(const SingularVectorField& x, const SingularFunction& f) {
  require_same(x.orbifold(), f.orbifold());
  return SingularFunction(x.orbifold(), orbq::apply_field(x.orbifold()->coords(), x.components(), f.rep()));
}

SingularVectorField scale(const SingularFunction& f, const SingularVectorField& x) {
  require_same(x.orbifold(), f.orbifold());
  Components c = x.components();
  for (auto& p : c) p = f.rep() * p;
  return SingularVectorField(x.orbifold(), std::move(c));
}

SingularVectorField vect_bracket(const SingularVectorField& x, const SingularVectorField& y) {
  require_same(x.orbifold(), y.orbifold());
  return SingularVectorField(x.orbifold(), bracket(x.orbifold()->coords(), x.components(), y.components()));
}

SingularFunction pair(const SingularOneForm& a, const SingularVectorField& x) {
  require_same(a.orbifold(), x.orbifold());
  return SingularFunction(a.orbifold(), orbq::pair(a.components(), x.components()));
}

SingularVectorField connection_apply(const SingularConnection& nabla, const SingularVectorField& x,
                                     const SingularVectorField& y) {
  require_same(nabla.orbifold(), x.orbifold());
  require_same(nabla.orbifold(), y.orbifold());
  return SingularVectorField(nabla.orbifold(),
                             covariant(nabla.orbifold()->coords(), nabla.christoffel(), x.components(), y.components()));
}

SingularConnection projective_shift(const SingularConnection& nabla, const SingularOneForm& a) {
  require_same(nabla.orbifold(), a.orbifold());
  return SingularConnection(nabla.orbifold(), shift_projectively(nabla.christoffel(), a.components()));
}

namespace {
void require_target(const LocalIsometry& phi, const OrbifoldPtr& orb) { require_same(phi.target(), orb); }
}  // namespace

SingularFunction pullback(const LocalIsometry& phi, const SingularFunction& f) {
  require_target(phi, f.orbifold());
  return SingularFunction(phi.source(), pull_function(phi.source()->coords(), phi.lift(), f.rep()));
}

SingularDiffOp pullback(const LocalIsometry& phi, const SingularDiffOp& d) {
  require_target(phi, d.orbifold());
  return SingularDiffOp(phi.source(), pull_operator(phi.lift(), d.op()), d.order());
}

SingularSymbol pullback(const LocalIsometry& phi, const SingularSymbol& s) {
  require_target(phi, s.orbifold());
  return SingularSymbol(phi.source(), pull_symbol(phi.lift(), s.tensor()));
}

SingularVectorField pullback(const LocalIsometry& phi, const SingularVectorField& x) {
  require_target(phi, x.orbifold());
  return SingularVectorField(phi.source(), pull_vector(phi.source()->coords(), phi.lift(), x.components()));
}

SingularOneForm pullback(const LocalIsometry& phi, const SingularOneForm& a) {
  require_target(phi, a.orbifold());
  return SingularOneForm(phi.source(), pull_covector(phi.source()->coords(), phi.lift(), a.components()));
}

SingularConnection pullback(const LocalIsometry& phi, const SingularConnection& nabla) {
  require_target(phi, nabla.orbifold());
  return SingularConnection(phi.source(),
                            pull_connection(phi.source()->coords(), phi.lift(), nabla.christoffel()));
}

}  // namespace orbq

#include "orbq/resolution/resolution.hpp"

#include <functional>

#include "orbq/errors.hpp"

namespace orbq {

namespace {

Components up(const Resolution& res, const Components& c) {
  Components out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(res.up(p));
  return out;
}

Components down(const Resolution& res, const Components& c) {
  Components out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(res.down(p));
  return out;
}

void require_orbifold(const Resolution& res, const OrbifoldPtr& orb) {
  if (res.orbifold() != orb && !res.orbifold()->same_as(*orb))
    throw DimensionMismatch("object does not live on the resolved orbifold");
}

void require_chart(const Resolution& res, const ChartPtr& chart) {
  if (res.chart() != chart && !res.chart()->same_as(*chart))
    throw DimensionMismatch("object does not live on the resolution chart");
}

// Coefficient tables share multi-indices: the transverse directions of the
// chart are ordered like the orbifold coordinates.
DiffOp transport(const DiffOp& d, const Coords& target, const std::function<Poly(const Poly&)>& map) {
  DiffOp out(target);
  for (const auto& [alpha, c] : d.coefficients()) out.add_term(alpha, map(c));
  return out;
}

SymTensor transport(const SymTensor& s, const Coords& target, const std::function<Poly(const Poly&)>& map) {
  SymTensor out(target, s.degree());
  for (const auto& [alpha, c] : s.components()) out.set(alpha, map(c));
  return out;
}

Christoffel transport(const Christoffel& g, const Coords& target, const std::function<Poly(const Poly&)>& map) {
  Christoffel out(target);
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(k, i, j) = map(g(k, i, j));
  return out;
}

}  // namespace

Resolution::Resolution(OrbifoldPtr orbifold)
    : orb_(std::move(orbifold)), chart_(make_chart(orb_->dim() * (orb_->dim() - 1) / 2, orb_->dim())) {}

Poly Resolution::up(const Poly& f) const {
  const Poly g = f.over(orb_->vars());
  std::vector<Poly> images;
  images.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) images.push_back(Poly::variable(chart_->vars(), leaf_dim() + i));
  return compose(g, chart_->vars(), images);
}

Poly Resolution::down(const Poly& f) const {
  const Poly g = f.over(chart_->vars());
  if (auto var = chart_->leaf_dependence(g))
    throw NotFoliated("cannot descend: depends on the leaf variable " + *var, g.to_string());
  std::vector<Poly> images;
  images.reserve(total_dim());
  for (std::size_t a = 0; a < leaf_dim(); ++a) images.emplace_back(orb_->vars());
  for (std::size_t i = 0; i < n(); ++i) images.push_back(Poly::variable(orb_->vars(), i));
  return compose(g, orb_->vars(), images);
}

Resolution resolve(const OrbifoldPtr& orbifold) { return Resolution(orbifold); }

FoliatedFunction pullback(const Resolution& res, const SingularFunction& f) {
  require_orbifold(res, f.orbifold());
  return FoliatedFunction(res.chart(), res.up(f.rep()));
}

FoliatedDiffOp pullback(const Resolution& res, const SingularDiffOp& d) {
  require_orbifold(res, d.orbifold());
  return FoliatedDiffOp(res.chart(), transport(d.op(), res.chart()->transverse(), [&](const Poly& p) { return res.up(p); }),
                        d.order());
}

FoliatedSymbol pullback(const Resolution& res, const SingularSymbol& s) {
  require_orbifold(res, s.orbifold());
  return FoliatedSymbol(res.chart(),
                        transport(s.tensor(), res.chart()->transverse(), [&](const Poly& p) { return res.up(p); }));
}

FoliatedVectorField pullback(const Resolution& res, const SingularVectorField& x) {
  require_orbifold(res, x.orbifold());
  return FoliatedVectorField(res.chart(), up(res, x.components()));
}

FoliatedOneForm pullback(const Resolution& res, const SingularOneForm& a) {
  require_orbifold(res, a.orbifold());
  return FoliatedOneForm(res.chart(), up(res, a.components()));
}

FoliatedConnection pullback(const Resolution& res, const SingularConnection& nabla) {
  require_orbifold(res, nabla.orbifold());
  return FoliatedConnection(
      res.chart(), transport(nabla.christoffel(), res.chart()->transverse(), [&](const Poly& p) { return res.up(p); }));
}

SingularFunction pullback_inverse(const Resolution& res, const FoliatedFunction& f) {
  require_chart(res, f.chart());
  return SingularFunction(res.orbifold(), res.down(f.rep()));
}

SingularDiffOp pullback_inverse(const Resolution& res, const FoliatedDiffOp& d) {
  require_chart(res, d.chart());
  return SingularDiffOp(res.orbifold(),
                        transport(d.op(), res.orbifold()->coords(), [&](const Poly& p) { return res.down(p); }),
                        d.order());
}

SingularSymbol pullback_inverse(const Resolution& res, const FoliatedSymbol& s) {
  require_chart(res, s.chart());
  return SingularSymbol(res.orbifold(),
                        transport(s.tensor(), res.orbifold()->coords(), [&](const Poly& p) { return res.down(p); }));
}

SingularVectorField pullback_inverse(const Resolution& res, const FoliatedVectorField& x) {
  require_chart(res, x.chart());
  return SingularVectorField(res.orbifold(), down(res, x.components()));
}

SingularOneForm pullback_inverse(const Resolution& res, const FoliatedOneForm& a) {
  require_chart(res, a.chart());
  return SingularOneForm(res.orbifold(), down(res, a.components()));
}

SingularConnection pullback_inverse(const Resolution& res, const FoliatedConnection& nabla) {
  require_chart(res, nabla.chart());
  return SingularConnection(res.orbifold(), transport(nabla.christoffel(), res.orbifold()->coords(),
                                                      [&](const Poly& p) { return res.down(p); }));
}

ResolvedIsometry::ResolvedIsometry(Resolution source, Resolution target, LocalIsometry phi)
    : src_(std::move(source)), dst_(std::move(target)), phi_(std::move(phi)) {
  require_orbifold(src_, phi_.source());
  require_orbifold(dst_, phi_.target());
}

FoliatedFunction ResolvedIsometry::pullback(const FoliatedFunction& f) const {
  require_chart(dst_, f.chart());
  return FoliatedFunction(src_.chart(), pull_function(src_.chart()->transverse(), transverse_action(), f.rep()));
}

FoliatedDiffOp ResolvedIsometry::pullback(const FoliatedDiffOp& d) const {
  require_chart(dst_, d.chart());
  return FoliatedDiffOp(src_.chart(), pull_operator(transverse_action(), d.op()), d.order());
}

FoliatedSymbol ResolvedIsometry::pullback(const FoliatedSymbol& s) const {
  require_chart(dst_, s.chart());
  return FoliatedSymbol(src_.chart(), pull_symbol(transverse_action(), s.tensor()));
}

FoliatedVectorField ResolvedIsometry::pullback(const FoliatedVectorField& x) const {
  require_chart(dst_, x.chart());
  return FoliatedVectorField(src_.chart(), pull_vector(src_.chart()->transverse(), transverse_action(), x.components()));
}

FoliatedConnection ResolvedIsometry::pullback(const FoliatedConnection& nabla) const {
  require_chart(dst_, nabla.chart());
  return FoliatedConnection(src_.chart(),
                            pull_connection(src_.chart()->transverse(), transverse_action(), nabla.christoffel()));
}

ResolvedIsometry lift_isometry(const Resolution& source, const Resolution& target, const LocalIsometry& phi) {
  return ResolvedIsometry(source, target, phi);
}

CommutationReport check_commutation(const ResolvedIsometry& lift, const SingularFunction& f, const SingularSymbol& s,
                                    const SingularConnection& nabla) {
  CommutationReport report;
  const Resolution& src = lift.source();
  const Resolution& dst = lift.target();
  const LocalIsometry& phi = lift.isometry();

  const FoliatedFunction f1 = pullback(src, orbq::pullback(phi, f));
  const FoliatedFunction f2 = lift.pullback(pullback(dst, f));
  if (!(f1 == f2)) {
    report.functions = false;
    report.first_diff = "function: " + f1.rep().to_string() + " != " + f2.rep().to_string();
  }

  const FoliatedSymbol s1 = pullback(src, orbq::pullback(phi, s));
  const FoliatedSymbol s2 = lift.pullback(pullback(dst, s));
  if (!(s1 == s2)) {
    report.symbols = false;
    if (report.first_diff.empty()) {
      for (const auto& [alpha, c] : s1.tensor().components()) {
        if (!(s2.tensor().component(alpha) == c)) {
          report.first_diff = "symbol component: " + c.to_string() + " != " + s2.tensor().component(alpha).to_string();
          break;
        }
      }
      if (report.first_diff.empty()) report.first_diff = "symbol: extra components on the right-hand side";
    }
  }

  const FoliatedConnection c1 = pullback(src, orbq::pullback(phi, nabla));
  const FoliatedConnection c2 = lift.pullback(pullback(dst, nabla));
  if (!(c1 == c2)) {
    report.connections = false;
    if (report.first_diff.empty()) {
      const std::size_t n = c1.christoffel().dim();
      for (std::size_t k = 0; k < n && report.first_diff.empty(); ++k)
        for (std::size_t i = 0; i < n && report.first_diff.empty(); ++i)
          for (std::size_t j = 0; j < n && report.first_diff.empty(); ++j)
            if (!(c1.christoffel()(k, i, j) == c2.christoffel()(k, i, j)))
              report.first_diff = "Christoffel " + std::to_string(k + 1) + "," + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ": " + c1.christoffel()(k, i, j).to_string() +
                                  " != " + c2.christoffel()(k, i, j).to_string();
    }
  }
  return report;
}

}  // namespace orbq

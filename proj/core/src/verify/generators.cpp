#include "orbq/verify/generators.hpp"

#include <numeric>

namespace orbq {

namespace {

std::vector<std::size_t> all_dirs(const Variables& vars) {
  std::vector<std::size_t> d(vars.size());
  std::iota(d.begin(), d.end(), 0);
  return d;
}

Components random_components(Rng& rng, const Coords& coords, std::size_t count, unsigned max_degree) {
  Components c;
  for (std::size_t i = 0; i < count; ++i) c.push_back(random_poly(rng, coords, max_degree));
  return c;
}

}  // namespace

Poly random_poly(Rng& rng, const Coords& coords, unsigned max_degree) {
  return rng.poly(coords.vars, coords.active, max_degree, 3, 1, 2);
}

SingularFunction random_function(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree) {
  return SingularFunction(orb, average_function(*orb, random_poly(rng, orb->coords(), max_degree)));
}

SingularDiffOp random_operator(Rng& rng, const OrbifoldPtr& orb, unsigned order, unsigned coeff_degree) {
  DiffOp d(orb->coords());
  for (unsigned k = 0; k <= order; ++k)
    for (const Monomial& alpha : monomials_of_degree(orb->dim(), k))
      if (k == order || rng.chance(2, 3)) d.add_term(alpha, random_poly(rng, orb->coords(), coeff_degree));
  return SingularDiffOp(orb, average_operator(*orb, d), order);
}

SingularSymbol random_symbol(Rng& rng, const OrbifoldPtr& orb, unsigned degree, unsigned coeff_degree) {
  SymTensor s(orb->coords(), degree);
  for (const Monomial& alpha : monomials_of_degree(orb->dim(), degree))
    s.set(alpha, random_poly(rng, orb->coords(), coeff_degree));
  return SingularSymbol(orb, average_symbol(*orb, s));
}

SingularVectorField random_vector_field(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree) {
  return SingularVectorField(
      orb, average_vector(*orb, random_components(rng, orb->coords(), orb->dim(), max_degree)));
}

SingularOneForm random_one_form(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree) {
  return SingularOneForm(orb,
                         average_covector(*orb, random_components(rng, orb->coords(), orb->dim(), max_degree)));
}

SingularConnection random_connection(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree) {
  const std::size_t n = orb->dim();
  Christoffel g(orb->coords());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g.set_symmetric(k, i, j, random_poly(rng, orb->coords(), max_degree));
  return SingularConnection(orb, average_connection(*orb, g));
}

LocalIsometry random_isometry(Rng& rng, const OrbifoldPtr& orb) {
  const std::size_t n = orb->dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, perm[i]) = rng.chance(1, 2) ? 1 : -1;
  if (n >= 2 && rng.chance(1, 2)) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    Matrix r = Matrix::identity(n);
    r(i, i) = ratio(3, 5);
    r(j, j) = ratio(3, 5);
    r(i, j) = ratio(-4, 5);
    r(j, i) = ratio(4, 5);
    a = r * a;
  }
  const OrthMatrix lin(a);
  const OrthMatrix inv = lin.inverse();
  std::vector<OrthMatrix> gens;
  for (const auto& g : orb->group().generators()) gens.push_back(lin * g * inv);
  OrbifoldPtr target = make_orbifold(n, gens, kDefaultGroupCap, orb->degree_bound());

  // Fixed points of the target group: kernel of the stacked (g - I).
  std::vector<Scalar> b(n);
  if (gens.empty()) {
    for (auto& x : b) x = rng.scalar(3);
  } else {
    Matrix stacked(gens.size() * n, n);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          stacked(g * n + r, c) = gens[g].matrix()(r, c) - (r == c ? 1 : 0);
    for (const auto& v : nullspace(stacked)) {
      const Scalar t = rng.scalar(3);
      for (std::size_t i = 0; i < n; ++i) b[i] += t * v[i];
    }
  }
  return LocalIsometry(orb, std::move(target), AffineMap{a, std::move(b)});
}

FoliatedVectorField random_foliated_field(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  return FoliatedVectorField(chart,
                             random_components(rng, chart->transverse(), chart->transverse_dim(), max_degree));
}

AdaptedVectorField random_adapted_field(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  const auto dirs = all_dirs(chart->vars());
  Components leaf;
  for (std::size_t a = 0; a < chart->leaf_dim(); ++a)
    leaf.push_back(rng.poly(chart->vars(), dirs, max_degree, 3, 1, 2));
  return AdaptedVectorField(chart, std::move(leaf),
                            random_components(rng, chart->transverse(), chart->transverse_dim(), max_degree));
}

AdaptedVectorField random_leafwise_field(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  const auto dirs = all_dirs(chart->vars());
  Components leaf;
  for (std::size_t a = 0; a < chart->leaf_dim(); ++a)
    leaf.push_back(rng.poly(chart->vars(), dirs, max_degree, 3, 1, 2));
  return AdaptedVectorField::leafwise(chart, std::move(leaf));
}

FoliatedFunction random_foliated_function(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  return FoliatedFunction(chart, random_poly(rng, chart->transverse(), max_degree));
}

FoliatedOneForm random_foliated_form(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  return FoliatedOneForm(chart, random_components(rng, chart->transverse(), chart->transverse_dim(), max_degree));
}

FoliatedConnection random_foliated_connection(Rng& rng, const ChartPtr& chart, unsigned max_degree) {
  const std::size_t q = chart->transverse_dim();
  Christoffel g(chart->transverse());
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = i; j < q; ++j) g.set_symmetric(k, i, j, random_poly(rng, chart->transverse(), max_degree));
  return FoliatedConnection(chart, std::move(g));
}

Components random_chart_form(Rng& rng, const FoliatedChart& chart, unsigned max_degree) {
  const std::size_t p = chart.leaf_dim();
  const auto dirs = all_dirs(chart.vars());
  Components form(p, Poly(chart.vars()));
  for (std::size_t i = 0; i < chart.transverse_dim(); ++i)
    form.push_back(random_poly(rng, chart.transverse(), max_degree));
  if (p == 0 || rng.chance(1, 2)) return form;
  // Break one of the two conditions.
  const std::size_t m = rng.below(p);
  const Poly leaf_var = Poly::variable(chart.vars(), m);
  if (rng.chance(1, 2)) {
    form[rng.below(p)] += rng.poly(chart.vars(), dirs, max_degree) + Poly(chart.vars(), Scalar(1));
  } else {
    form[p + rng.below(chart.transverse_dim())] += leaf_var * rng.poly(chart.vars(), dirs, 1) + leaf_var;
  }
  return form;
}

}  // namespace orbq

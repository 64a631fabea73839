#include "orbq/algebra/symtensor.hpp"

#include "orbq/errors.hpp"

namespace orbq {

Scalar multinomial(const Monomial& alpha) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), alpha.degree());
  mpz_class den = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), alpha[i]);
    den *= f;
  }
  Scalar r{num, den};
  r.canonicalize();
  return r;
}

Monomial SymTensor::multiplicities(std::span<const std::size_t> indices) const {
  if (indices.size() != degree_) throw DimensionMismatch("symbol index count differs from degree");
  Monomial alpha(dim());
  for (std::size_t i : indices) {
    if (i >= dim()) throw DimensionMismatch("symbol index out of range");
    alpha.increment(i);
  }
  return alpha;
}

Poly SymTensor::component(std::span<const std::size_t> indices) const { return component(multiplicities(indices)); }

Poly SymTensor::component(const Monomial& alpha) const {
  const auto it = comps_.find(alpha);
  return it == comps_.end() ? Poly(coords_.vars) : it->second;
}

void SymTensor::set(std::span<const std::size_t> indices, const Poly& value) { set(multiplicities(indices), value); }

void SymTensor::set(const Monomial& alpha, const Poly& value) {
  if (alpha.size() != dim() || alpha.degree() != degree_) throw DimensionMismatch("bad symbol multi-index");
  if (value.is_zero())
    comps_.erase(alpha);
  else
    comps_.insert_or_assign(alpha, value.over(coords_.vars));
}

DiffOp SymTensor::to_operator() const {
  DiffOp d(coords_);
  for (const auto& [alpha, s] : comps_) d.add_term(alpha, s * multinomial(alpha));
  return d;
}

SymTensor SymTensor::leading(const DiffOp& d, unsigned k) {
  if (d.order() > static_cast<int>(k)) {
    throw OrderError("symbol degree " + std::to_string(k) + " below operator order " + std::to_string(d.order()));
  }
  SymTensor s(d.coords(), k);
  for (const auto& [alpha, c] : d.coefficients()) {
    if (alpha.degree() != k) continue;
    Scalar w = multinomial(alpha);
    s.comps_.emplace(alpha, c * (Scalar(1) / w));
  }
  return s;
}

Poly SymTensor::contract(const Variables& symbol_vars) const { return to_operator().total_symbol(symbol_vars); }

SymTensor operator+(const SymTensor& a, const SymTensor& b) {
  if (!(a.coords_ == b.coords_) || a.degree_ != b.degree_) throw DimensionMismatch("adding incompatible symbols");
  SymTensor r = a;
  for (const auto& [alpha, s] : b.comps_) r.set(alpha, r.component(alpha) + s);
  return r;
}

SymTensor operator*(const Poly& f, const SymTensor& s) {
  SymTensor r(s.coords_, s.degree_);
  for (const auto& [alpha, c] : s.comps_) r.set(alpha, f * c);
  return r;
}

SymTensor poisson_bracket(const SymTensor& p, const SymTensor& q) {
  if (!(p.coords() == q.coords())) throw DimensionMismatch("bracket of symbols over different coordinates");
  const Coords& coords = p.coords();
  const unsigned degree = p.degree() + q.degree() == 0 ? 0 : p.degree() + q.degree() - 1;
  if (p.degree() + q.degree() == 0) return SymTensor(coords, 0);
  const DiffOp dp = p.to_operator();
  const Variables ext = dp.symbol_variables();
  const Poly sp = p.contract(ext);
  const Poly sq = q.contract(ext);
  const std::size_t nv = coords.vars.size();
  Poly br(ext);
  for (std::size_t k = 0; k < coords.dim(); ++k) {
    const std::size_t x = coords.active[k];
    const std::size_t xi = nv + k;
    br += sp.derivative(xi) * sq.derivative(x) - sp.derivative(x) * sq.derivative(xi);
  }
  return SymTensor::leading(DiffOp::from_total_symbol(coords, br), degree);
}

}  // namespace orbq

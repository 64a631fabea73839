#include "orbq/algebra/diffop.hpp"

#include "orbq/errors.hpp"

namespace orbq {

namespace {

Scalar binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

// d^beta f, beta over the active directions.
Poly derive(const Coords& coords, const Poly& f, const Monomial& beta) {
  Poly r = f;
  for (std::size_t k = 0; k < beta.size() && !r.is_zero(); ++k)
    for (unsigned e = 0; e < beta[k]; ++e) r = r.derivative(coords.active[k]);
  return r;
}

}  // namespace

Coords Coords::all(const Variables& vars) {
  Coords c{vars, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) c.active.push_back(i);
  return c;
}

DiffOp DiffOp::identity(const Coords& coords) { return multiplication(coords, Poly(coords.vars, Scalar(1))); }

DiffOp DiffOp::multiplication(const Coords& coords, const Poly& f) {
  DiffOp d(coords);
  d.add_term(Monomial(coords.dim()), f);
  return d;
}

DiffOp DiffOp::partial(const Coords& coords, std::size_t k) {
  DiffOp d(coords);
  d.add_term(Monomial::unit(coords.dim(), k), Poly(coords.vars, Scalar(1)));
  return d;
}

Poly DiffOp::coefficient(const Monomial& alpha) const {
  const auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Poly(coords_.vars) : it->second;
}

int DiffOp::order() const {
  if (coeffs_.empty()) return -1;
  return static_cast<int>(coeffs_.rbegin()->first.degree());
}

void DiffOp::add_term(const Monomial& alpha, const Poly& coeff) {
  if (coeff.is_zero()) return;
  if (alpha.size() != coords_.dim()) throw DimensionMismatch("multi-index length differs from operator dimension");
  auto [it, inserted] = coeffs_.try_emplace(alpha, Poly(coords_.vars));
  it->second += coeff.over(coords_.vars);
  if (it->second.is_zero()) coeffs_.erase(it);
}

Poly DiffOp::apply(const Poly& f) const {
  Poly g = f.over(coords_.vars);
  Poly out(coords_.vars);
  for (const auto& [alpha, c] : coeffs_) out += c * derive(coords_, g, alpha);
  return out;
}

void DiffOp::check_compatible(const DiffOp& o) const {
  if (!(coords_ == o.coords_)) throw DimensionMismatch("operators over different coordinates");
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.coeffs_) add_term(alpha, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.coeffs_) add_term(alpha, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(coords_);
  for (const auto& [alpha, c] : coeffs_) r.coeffs_.emplace(alpha, -c);
  return r;
}

DiffOp operator*(const Poly& f, const DiffOp& d) {
  DiffOp r(d.coords_);
  if (f.is_zero()) return r;
  for (const auto& [alpha, c] : d.coeffs_) r.add_term(alpha, f * c);
  return r;
}

DiffOp operator*(const Scalar& s, const DiffOp& d) {
  DiffOp r(d.coords_);
  if (is_zero(s)) return r;
  for (const auto& [alpha, c] : d.coeffs_) r.coeffs_.emplace(alpha, c * s);
  return r;
}

DiffOp DiffOp::partial_then(std::size_t k) const {
  DiffOp r(coords_);
  for (const auto& [alpha, c] : coeffs_) {
    r.add_term(alpha, c.derivative(coords_.active[k]));
    Monomial raised = alpha;
    raised.increment(k);
    r.add_term(raised, c);
  }
  return r;
}

DiffOp DiffOp::homogeneous_part(unsigned k) const {
  DiffOp r(coords_);
  for (const auto& [alpha, c] : coeffs_)
    if (alpha.degree() == k) r.coeffs_.emplace(alpha, c);
  return r;
}

Variables DiffOp::symbol_variables() const {
  std::vector<std::string> names = coords_.vars.names();
  for (std::size_t k = 0; k < coords_.dim(); ++k) names.push_back("xi_" + coords_.name(k));
  return Variables(std::move(names));
}

Poly DiffOp::total_symbol(const Variables& extended) const {
  const std::size_t nv = coords_.vars.size();
  if (extended.size() != nv + coords_.dim()) throw DimensionMismatch("symbol variable set has wrong size");
  Poly sigma(extended);
  for (const auto& [alpha, c] : coeffs_) {
    for (const auto& [m, v] : c.terms()) {
      std::vector<unsigned> e(m.exponents());
      e.insert(e.end(), alpha.exponents().begin(), alpha.exponents().end());
      sigma.add_term(Monomial(std::move(e)), v);
    }
  }
  return sigma;
}

DiffOp DiffOp::from_total_symbol(const Coords& coords, const Poly& symbol) {
  const std::size_t nv = coords.vars.size();
  if (symbol.nvars() != nv + coords.dim()) throw DimensionMismatch("symbol has wrong variable count");
  std::map<Monomial, Poly> parts;
  for (const auto& [m, v] : symbol.terms()) {
    const auto& e = m.exponents();
    Monomial x(std::vector<unsigned>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nv)));
    Monomial alpha(std::vector<unsigned>(e.begin() + static_cast<std::ptrdiff_t>(nv), e.end()));
    auto [it, inserted] = parts.try_emplace(alpha, Poly(coords.vars));
    it->second.add_term(x, v);
  }
  DiffOp d(coords);
  for (auto& [alpha, c] : parts) d.add_term(alpha, c);
  return d;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (!(a.coords() == b.coords())) throw DimensionMismatch("composing operators over different coordinates");
  const Coords& coords = a.coords();
  DiffOp out(coords);
  for (const auto& [alpha, ca] : a.coefficients()) {
    const auto gammas = sub_indices(alpha);
    for (const auto& [beta, cb] : b.coefficients()) {
      for (const auto& gamma : gammas) {
        Poly d = derive(coords, cb, gamma);
        if (d.is_zero()) continue;
        Scalar mult(1);
        for (std::size_t k = 0; k < alpha.size(); ++k) mult *= binomial(alpha[k], gamma[k]);
        out.add_term((alpha / gamma) * beta, ca * d * mult);
      }
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

}  // namespace orbq

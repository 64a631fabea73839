#include "orbq/algebra/poly.hpp"

#include <sstream>
#include <vector>

#include "orbq/errors.hpp"

namespace orbq {

namespace {

void generate_monomials(std::size_t nvars, unsigned degree, std::size_t pos, std::vector<unsigned>& cur,
                        std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur[pos] = e;
    generate_monomials(nvars, degree - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  generate_monomials(nvars, degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> sub_indices(const Monomial& alpha) {
  std::vector<Monomial> out{Monomial(alpha.size())};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (unsigned e = 0; e <= alpha[i]; ++e) {
        Monomial t = m;
        t.set(i, e);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

Poly::Poly(Variables vars, const Scalar& constant) : vars_(std::move(vars)) {
  if (!orbq::is_zero(constant)) terms_.emplace(Monomial(vars_.size()), constant);
}

Poly Poly::variable(const Variables& vars, std::size_t index) {
  if (index >= vars.size()) throw DimensionMismatch("variable index out of range");
  Poly p(vars);
  p.terms_.emplace(Monomial::unit(vars.size(), index), Scalar(1));
  return p;
}

Poly Poly::variable(const Variables& vars, std::string_view name) { return variable(vars, vars.index_of(name)); }

Poly Poly::term(const Variables& vars, const Monomial& exps, const Scalar& coeff) {
  if (exps.size() != vars.size()) throw DimensionMismatch("exponent vector length differs from variable count");
  Poly p(vars);
  if (!orbq::is_zero(coeff)) p.terms_.emplace(exps, coeff);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Scalar Poly::coeff(const Monomial& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coeff(Monomial(vars_.size())); }

bool Poly::depends_on(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] != 0) return true;
  return false;
}

void Poly::add_term(const Monomial& exps, const Scalar& c) {
  if (orbq::is_zero(c)) return;
  if (exps.size() != vars_.size()) throw DimensionMismatch("exponent vector length differs from variable count");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (orbq::is_zero(it->second)) terms_.erase(it);
  }
}

void Poly::promote_to(const Variables& vars) {
  if (!vars_.empty() || vars.empty()) return;
  TermMap promoted;
  for (auto& [m, c] : terms_) promoted.emplace(Monomial(vars.size()), c);
  terms_ = std::move(promoted);
  vars_ = vars;
}

void Poly::check_compatible(const Poly& o) const {
  if (!(vars_ == o.vars_)) throw DimensionMismatch("polynomials over different variable sets");
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.vars_.empty()) {
    if (!o.terms_.empty()) add_term(Monomial(vars_.size()), o.terms_.begin()->second);
    return *this;
  }
  promote_to(o.vars_);
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    return Poly(a.vars_.empty() ? b.vars_ : a.vars_);
  }
  if (a.vars_.empty()) return b * a.terms_.begin()->second;
  if (b.vars_.empty()) return a * b.terms_.begin()->second;
  a.check_compatible(b);
  Poly r(a.vars_);
  Scalar prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (orbq::is_zero(it->second))
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (orbq::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.vars_.empty() || b.vars_.empty()) {
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
  }
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly result(vars_, Scalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw DimensionMismatch("derivative variable index out of range");
  Poly r(vars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.terms_.emplace(std::move(d), c * e);
  }
  return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point has wrong dimension");
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::over(const Variables& target) const {
  if (vars_ == target) return *this;
  std::vector<Poly> images;
  images.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto j = target.find(vars_[i]);
    if (!j) {
      if (depends_on(i)) throw UnknownVariable(vars_[i]);
      images.emplace_back(target);
    } else {
      images.push_back(Poly::variable(target, *j));
    }
  }
  return compose(*this, target, images);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out << orbq::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << "*";
      out << vars_[i];
      if (m[i] > 1) out << "^" << m[i];
      wrote = true;
    }
  }
  return out.str();
}

Poly differentiate(const Poly& f, std::string_view var) {
  const auto i = f.vars().find(var);
  if (!i) throw UnknownVariable(std::string(var));
  return f.derivative(*i);
}

Poly compose(const Poly& f, const Variables& target, std::span<const Poly> images) {
  if (images.size() != f.nvars()) throw DimensionMismatch("compose: one image per variable required");
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly(target, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& [m, c] : f.terms()) {
    Poly t(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

}  // namespace orbq

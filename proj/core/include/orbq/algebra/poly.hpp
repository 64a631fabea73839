#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "orbq/algebra/monomial.hpp"
#include "orbq/algebra/scalar.hpp"
#include "orbq/algebra/variables.hpp"

namespace orbq {

// Sparse multivariate polynomial with exact rational coefficients over a fixed
// ordered variable set. No zero coefficient is ever stored, so structural
// equality is mathematical equality.
//
// A polynomial over the empty variable set is a constant and is promoted
// implicitly when combined with a polynomial over any variable set.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Poly() = default;
  explicit Poly(Variables vars) : vars_(std::move(vars)) {}
  Poly(Variables vars, const Scalar& constant);

  static Poly variable(const Variables& vars, std::size_t index);
  static Poly variable(const Variables& vars, std::string_view name);
  static Poly term(const Variables& vars, const Monomial& exps, const Scalar& coeff);

  const Variables& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  Scalar coeff(const Monomial& exps) const;
  Scalar constant_term() const;
  bool depends_on(std::size_t var) const;

  // Adds c * x^exps in place.
  void add_term(const Monomial& exps, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  // Re-expresses the polynomial over `target`; a variable not present in
  // `target` must not occur.
  Poly over(const Variables& target) const;

  std::string to_string() const;

 private:
  void promote_to(const Variables& vars);
  void check_compatible(const Poly& o) const;

  Variables vars_;
  TermMap terms_;
};

// df/dvar. Throws UnknownVariable if var is not in f's variable set.
Poly differentiate(const Poly& f, std::string_view var);

// Substitutes variable i of f by images[i]; every image lives over `target`.
Poly compose(const Poly& f, const Variables& target, std::span<const Poly> images);

}  // namespace orbq

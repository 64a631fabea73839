#include "orbq/algebra/calculus.hpp"

#include "orbq/errors.hpp"

namespace orbq {

namespace {

void check_dim(const Coords& coords, const Components& c) {
  if (c.size() != coords.dim()) throw DimensionMismatch("component count differs from coordinate dimension");
}

void check_map(const Coords& coords, const AffineMap& t) {
  if (t.dim() != coords.dim() || t.translation.size() != coords.dim())
    throw DimensionMismatch("affine map dimension differs from coordinate dimension");
}

// Images of every variable of `vars` under x_active -> A x_active + b.
std::vector<Poly> affine_images(const Coords& coords, const Variables& target, const AffineMap& t) {
  std::vector<Poly> images;
  images.reserve(coords.vars.size());
  for (std::size_t v = 0; v < coords.vars.size(); ++v) images.push_back(Poly::variable(target, v));
  for (std::size_t i = 0; i < coords.dim(); ++i) {
    Poly img(target, t.translation[i]);
    for (std::size_t j = 0; j < coords.dim(); ++j) {
      const Scalar& a = t.linear(i, j);
      if (!is_zero(a)) img += Poly::variable(target, coords.active[j]) * a;
    }
    images[coords.active[i]] = std::move(img);
  }
  return images;
}

}  // namespace

Components zero_components(const Coords& coords) { return Components(coords.dim(), Poly(coords.vars)); }

Poly apply_field(const Coords& coords, const Components& x, const Poly& f) {
  check_dim(coords, x);
  Poly g = f.over(coords.vars);
  Poly out(coords.vars);
  for (std::size_t k = 0; k < coords.dim(); ++k) {
    if (x[k].is_zero()) continue;
    out += x[k] * g.derivative(coords.active[k]);
  }
  return out;
}

Components bracket(const Coords& coords, const Components& x, const Components& y) {
  check_dim(coords, x);
  check_dim(coords, y);
  Components out(coords.dim());
  for (std::size_t j = 0; j < coords.dim(); ++j) out[j] = apply_field(coords, x, y[j]) - apply_field(coords, y, x[j]);
  return out;
}

DiffOp field_operator(const Coords& coords, const Components& x) {
  check_dim(coords, x);
  DiffOp d(coords);
  for (std::size_t k = 0; k < coords.dim(); ++k) d.add_term(Monomial::unit(coords.dim(), k), x[k]);
  return d;
}

Components operator_field(const DiffOp& d) {
  if (d.order() > 1) throw OrderError("operator of order " + std::to_string(d.order()) + " is not a vector field");
  if (!d.coefficient(Monomial(d.coords().dim())).is_zero())
    throw ValidationError("operator has a nonzero order-0 part; not in the image of the splitting");
  Components out(d.coords().dim());
  for (std::size_t k = 0; k < d.coords().dim(); ++k) out[k] = d.coefficient(Monomial::unit(d.coords().dim(), k));
  return out;
}

Poly pair(const Components& form, const Components& x) {
  if (form.size() != x.size()) throw DimensionMismatch("pairing components of different length");
  Poly out;
  for (std::size_t k = 0; k < x.size(); ++k) out += form[k] * x[k];
  return out;
}

Christoffel::Christoffel(const Coords& coords)
    : dim_(coords.dim()), vars_(coords.vars), data_(dim_ * dim_ * dim_, Poly(coords.vars)) {}

void Christoffel::set_symmetric(std::size_t k, std::size_t i, std::size_t j, const Poly& value) {
  (*this)(k, i, j) = value.over(vars_);
  (*this)(k, j, i) = value.over(vars_);
}

bool Christoffel::find_asymmetry(std::size_t& k, std::size_t& i, std::size_t& j) const {
  for (k = 0; k < dim_; ++k)
    for (i = 0; i < dim_; ++i)
      for (j = i + 1; j < dim_; ++j)
        if (!((*this)(k, i, j) == (*this)(k, j, i))) return true;
  return false;
}

bool Christoffel::symmetric() const {
  std::size_t k, i, j;
  return !find_asymmetry(k, i, j);
}

bool Christoffel::is_flat_table() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

Components covariant(const Coords& coords, const Christoffel& gamma, const Components& x, const Components& y) {
  check_dim(coords, x);
  check_dim(coords, y);
  if (gamma.dim() != coords.dim()) throw DimensionMismatch("connection dimension differs from coordinates");
  Components out(coords.dim());
  for (std::size_t k = 0; k < coords.dim(); ++k) {
    Poly v = apply_field(coords, x, y[k]);
    for (std::size_t i = 0; i < coords.dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < coords.dim(); ++j) {
        if (y[j].is_zero() || gamma(k, i, j).is_zero()) continue;
        v += gamma(k, i, j) * x[i] * y[j];
      }
    }
    out[k] = std::move(v);
  }
  return out;
}

Christoffel shift_projectively(const Christoffel& gamma, const Components& theta) {
  if (theta.size() != gamma.dim()) throw DimensionMismatch("1-form dimension differs from connection");
  Christoffel out = gamma;
  const std::size_t n = gamma.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      out(k, k, j) += theta[j];
      out(k, j, k) += theta[j];
    }
  return out;
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap{Matrix::identity(n), std::vector<Scalar>(n)}; }

AffineMap AffineMap::inverse() const {
  Matrix inv = linear.inverse();
  std::vector<Scalar> b = inv.apply(translation);
  for (auto& v : b) v = -v;
  return AffineMap{std::move(inv), std::move(b)};
}

AffineMap AffineMap::after(const AffineMap& other) const {
  std::vector<Scalar> b = linear.apply(other.translation);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += translation[i];
  return AffineMap{linear * other.linear, std::move(b)};
}

Poly pull_function(const Coords& coords, const AffineMap& t, const Poly& f) {
  check_map(coords, t);
  const Poly g = f.over(coords.vars);
  return compose(g, coords.vars, affine_images(coords, coords.vars, t));
}

DiffOp pull_operator(const AffineMap& t, const DiffOp& d) {
  const Coords& coords = d.coords();
  check_map(coords, t);
  // sigma'(x, xi) = sigma(A x + b, A^-T xi).
  const Variables ext = d.symbol_variables();
  const Poly sigma = d.total_symbol(ext);
  Coords ext_coords{ext, coords.active};
  std::vector<Poly> images = affine_images(ext_coords, ext, t);
  const Matrix inv_t = t.linear.inverse().transpose();
  const std::size_t nv = coords.vars.size();
  for (std::size_t i = 0; i < coords.dim(); ++i) {
    Poly img(ext);
    for (std::size_t j = 0; j < coords.dim(); ++j) {
      const Scalar& a = inv_t(i, j);
      if (!is_zero(a)) img += Poly::variable(ext, nv + j) * a;
    }
    images[nv + i] = std::move(img);
  }
  return DiffOp::from_total_symbol(coords, compose(sigma, ext, images));
}

Components pull_vector(const Coords& coords, const AffineMap& t, const Components& x) {
  return operator_field(pull_operator(t, field_operator(coords, x)));
}

Components pull_covector(const Coords& coords, const AffineMap& t, const Components& form) {
  check_dim(coords, form);
  check_map(coords, t);
  // alpha'_i(x) = sum_j alpha_j(A x + b) A_ji.
  Components pulled(coords.dim());
  for (std::size_t j = 0; j < coords.dim(); ++j) pulled[j] = pull_function(coords, t, form[j]);
  Components out(coords.dim(), Poly(coords.vars));
  for (std::size_t i = 0; i < coords.dim(); ++i)
    for (std::size_t j = 0; j < coords.dim(); ++j)
      if (!is_zero(t.linear(j, i))) out[i] += pulled[j] * t.linear(j, i);
  return out;
}

SymTensor pull_symbol(const AffineMap& t, const SymTensor& s) {
  return SymTensor::leading(pull_operator(t, s.to_operator()), s.degree());
}

Christoffel pull_connection(const Coords& coords, const AffineMap& t, const Christoffel& gamma) {
  check_map(coords, t);
  const AffineMap inv = t.inverse();
  const std::size_t n = coords.dim();
  std::vector<Components> pushed(n);
  for (std::size_t i = 0; i < n; ++i) {
    Components e = zero_components(coords);
    e[i] = Poly(coords.vars, Scalar(1));
    pushed[i] = pull_vector(coords, inv, e);
  }
  Christoffel out(coords);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Components v = pull_vector(coords, t, covariant(coords, gamma, pushed[i], pushed[j]));
      for (std::size_t k = 0; k < n; ++k) out(k, i, j) = v[k];
    }
  return out;
}

}  // namespace orbq

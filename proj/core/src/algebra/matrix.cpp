#include "orbq/algebra/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "orbq/errors.hpp"

namespace orbq {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::inverse() const {
  if (!square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw ValidationError("singular matrix", to_string());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

bool operator<(const Matrix& a, const Matrix& b) {
  return std::lexicographical_compare(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << orbq::to_string((*this)(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

bool is_orthogonal(const Matrix& m) { return m.square() && m.transpose() * m == Matrix::identity(m.rows()); }

OrthMatrix::OrthMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_orthogonal(m_)) throw NotOrthogonal("matrix is not orthogonal", m_.to_string());
}

OrthMatrix OrthMatrix::identity(std::size_t n) { return OrthMatrix(Matrix::identity(n), Trusted{}); }

OrthMatrix OrthMatrix::inverse() const { return OrthMatrix(m_.transpose(), Trusted{}); }

OrthMatrix operator*(const OrthMatrix& a, const OrthMatrix& b) {
  return OrthMatrix(a.m_ * b.m_, OrthMatrix::Trusted{});
}

void LinearSystem::add_equation(std::vector<Scalar> coeffs, Scalar rhs) {
  if (coeffs.size() != n_) throw DimensionMismatch("equation has wrong number of unknowns");
  ++seen_;
  for (const auto& row : rows_) {
    if (is_zero(coeffs[row.pivot])) continue;
    const Scalar f = coeffs[row.pivot];
    for (std::size_t j = 0; j < n_; ++j) coeffs[j] -= f * row.coeffs[j];
    rhs -= f * row.rhs;
  }
  std::size_t piv = 0;
  while (piv < n_ && is_zero(coeffs[piv])) ++piv;
  if (piv == n_) {
    if (!is_zero(rhs)) consistent_ = false;
    return;
  }
  const Scalar p = coeffs[piv];
  for (auto& c : coeffs) c /= p;
  rhs /= p;
  for (auto& row : rows_) {
    if (is_zero(row.coeffs[piv])) continue;
    const Scalar f = row.coeffs[piv];
    for (std::size_t j = 0; j < n_; ++j) row.coeffs[j] -= f * coeffs[j];
    row.rhs -= f * rhs;
  }
  rows_.push_back(Row{piv, std::move(coeffs), std::move(rhs)});
}

std::optional<std::vector<Scalar>> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<Scalar> x(n_);
  for (const auto& row : rows_) x[row.pivot] = row.rhs;
  return x;
}

std::vector<std::size_t> LinearSystem::free_unknowns() const {
  std::vector<bool> pivot(n_, false);
  for (const auto& row : rows_) pivot[row.pivot] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (!pivot[j]) out.push_back(j);
  return out;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  LinearSystem sys(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    sys.add_equation(std::move(row), Scalar(0));
  }
  // Each free unknown set to 1 (others free 0) gives one basis vector.
  std::vector<std::vector<Scalar>> basis;
  const auto frees = sys.free_unknowns();
  for (std::size_t f : frees) {
    LinearSystem pinned = sys;
    for (std::size_t g : frees) {
      std::vector<Scalar> e(m.cols());
      e[g] = 1;
      pinned.add_equation(std::move(e), Scalar(g == f ? 1 : 0));
    }
    basis.push_back(*pinned.solve());
  }
  return basis;
}

}  // namespace orbq

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbq/algebra/scalar.hpp"

namespace orbq {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const noexcept { return a_; }

  Matrix transpose() const;
  // Throws ValidationError if singular.
  Matrix inverse() const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  // Lexicographic on entries; only meaningful between equal shapes.
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Element of O(n): M^T M = I holds exactly.
class OrthMatrix {
 public:
  // Throws NotOrthogonal.
  explicit OrthMatrix(Matrix m);
  static OrthMatrix identity(std::size_t n);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  OrthMatrix inverse() const;

  friend OrthMatrix operator*(const OrthMatrix& a, const OrthMatrix& b);
  friend bool operator==(const OrthMatrix& a, const OrthMatrix& b) { return a.m_ == b.m_; }
  friend bool operator<(const OrthMatrix& a, const OrthMatrix& b) { return a.m_ < b.m_; }

 private:
  struct Trusted {};
  OrthMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

bool is_orthogonal(const Matrix& m);

// Incrementally maintained reduced row-echelon system A c = b over the
// rationals.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t equations_seen() const noexcept { return seen_; }
  bool consistent() const noexcept { return consistent_; }

  void add_equation(std::vector<Scalar> coeffs, Scalar rhs);

  // Solution with every free unknown set to zero; nullopt if inconsistent.
  std::optional<std::vector<Scalar>> solve() const;
  std::vector<std::size_t> free_unknowns() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Scalar> coeffs;
    Scalar rhs;
  };
  std::size_t n_;
  std::size_t seen_ = 0;
  bool consistent_ = true;
  std::vector<Row> rows_;
};

// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

}  // namespace orbq

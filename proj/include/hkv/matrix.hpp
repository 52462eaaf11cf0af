#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hkv/rational.hpp"

namespace hkv {

// Dense row-major rational matrix. Kernels below skip zero entries, so the
// sparse tables that dominate this code base stay cheap despite dense storage.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix column(std::span<const Rational> v);
  static Matrix row_vector(std::span<const Rational> v);
  static Matrix outer(std::span<const Rational> a, std::span<const Rational> b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RationalVector column_copy(std::size_t j) const;

  Matrix transposed() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const;
  bool is_symmetric() const;
  std::size_t nonzero_count() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Parallel product. Rows of the result are distributed over OpenMP threads;
// zero entries of either factor are skipped.
Matrix multiply(const Matrix& a, const Matrix& b);

// Serial textbook triple loop, kept as the reference for tests and benchmarks.
Matrix multiply_reference(const Matrix& a, const Matrix& b);

RationalVector apply(const Matrix& a, std::span<const Rational> x);
RationalVector apply_transpose(const Matrix& a, std::span<const Rational> x);

std::size_t rank(Matrix a);
Rational determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);
std::optional<RationalVector> solve(const Matrix& a, std::span<const Rational> b);

// Rows of the result form a basis of {x : a x = 0}.
Matrix kernel_basis(const Matrix& a);

}  // namespace hkv

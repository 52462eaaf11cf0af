#include "hkv/matrix.hpp"

#include <algorithm>
#include <utility>

#include "hkv/error.hpp"

namespace hkv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::BadShape, "ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::column(std::span<const Rational> v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row_vector(std::span<const Rational> v) {
  Matrix m(1, v.size());
  std::copy(v.begin(), v.end(), m.row(0).begin());
  return m;
}

Matrix Matrix::outer(std::span<const Rational> a, std::span<const Rational> b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) m(i, j) = a[i] * b[j];
    }
  }
  return m;
}

RationalVector Matrix::column_copy(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (sgn(x) != 0) t(j, i) = x;
    }
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::BadShape, "matrix sum shape");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (sgn(other.data_[k]) != 0) data_[k] += other.data_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::BadShape, "matrix difference shape");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (sgn(other.data_[k]) != 0) data_[k] -= other.data_[k];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& x : data_) x = 0;
    return *this;
  }
  for (auto& x : data_) {
    if (sgn(x) != 0) x *= s;
  }
  return *this;
}

bool Matrix::is_zero() const { return hkv::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t Matrix::nonzero_count() const { return count_nonzero(data_); }

namespace {

struct SparseRow {
  std::vector<std::size_t> index;
  std::vector<const Rational*> value;
};

std::vector<SparseRow> compress_rows(const Matrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) {
        rows[i].index.push_back(j);
        rows[i].value.push_back(&m(i, j));
      }
    }
  }
  return rows;
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::BadShape, "matrix product shape");
  Matrix c(a.rows(), b.cols());
  const auto brows = compress_rows(b);
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    auto out = c.row(ui);
    Rational term;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(ui, k);
      if (sgn(x) == 0) continue;
      const auto& br = brows[k];
      for (std::size_t t = 0; t < br.index.size(); ++t) {
        mpq_mul(term.get_mpq_t(), x.get_mpq_t(), br.value[t]->get_mpq_t());
        out[br.index[t]] += term;
      }
    }
  }
  return c;
}

Matrix multiply_reference(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::BadShape, "matrix product shape");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

RationalVector apply(const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::BadShape, "matrix-vector shape");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

RationalVector apply_transpose(const Matrix& a, std::span<const Rational> x) {
  if (a.rows() != x.size()) throw Error(ErrorKind::BadShape, "matrix-vector shape");
  RationalVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(r[j]) != 0) y[j] += x[i] * r[j];
    }
  }
  return y;
}

namespace {

// Gauss-Jordan elimination restricted to the first `ncols` columns.
// Returns pivot columns; `sign` tracks row swaps for determinants.
std::vector<std::size_t> reduce(Matrix& m, std::size_t ncols, bool full, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < m.rows(); ++col) {
    // Prefer the sparsest usable pivot row to limit fill-in.
    std::size_t best = m.rows();
    std::size_t best_nnz = 0;
    for (std::size_t i = prow; i < m.rows(); ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const auto nnz = count_nonzero(m.row(i));
      if (best == m.rows() || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best == m.rows()) continue;
    if (best != prow) {
      auto a = m.row(best);
      auto b = m.row(prow);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      if (sign) *sign = -*sign;
    }
    auto pr = m.row(prow);
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (sgn(pr[j]) != 0) support.push_back(j);
    }
    for (std::size_t i = full ? 0 : prow + 1; i < m.rows(); ++i) {
      if (i == prow || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col) / pr[col];
      auto r = m.row(i);
      for (auto j : support) r[j] -= f * pr[j];
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix a) { return reduce(a, a.cols(), false).size(); }

Rational determinant(Matrix a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadShape, "determinant of non-square matrix");
  int sign = 1;
  const auto piv = reduce(a, a.cols(), false, &sign);
  if (piv.size() < a.rows()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadShape, "inverse of non-square matrix");
  const auto n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (reduce(aug, n, true).size() < n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational p = aug(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(aug(i, n + j)) != 0) inv(i, j) = aug(i, n + j) / p;
    }
  }
  return inv;
}

std::optional<RationalVector> solve(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::BadShape, "solve shape");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto piv = reduce(aug, a.cols(), true);
  for (std::size_t i = piv.size(); i < a.rows(); ++i) {
    if (sgn(aug(i, a.cols())) != 0) return std::nullopt;
  }
  RationalVector x(a.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, a.cols()) / aug(k, piv[k]);
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  Matrix m = a;
  const auto piv = reduce(m, m.cols(), true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (sgn(m(k, free)) != 0) v[piv[k]] = -m(k, free) / m(k, piv[k]);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, a.cols());
  return Matrix::from_rows(basis);
}

}  // namespace hkv

#include "vmrt/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "vmrt/errors.hpp"

namespace vmrt {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols, "Mat::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows_if_empty) {
  const std::size_t rows = columns.empty() ? rows_if_empty : columns.front().size();
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_size(columns[c].size(), rows, "Mat::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Mat::append_row(const Vec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  require_same_size(row.size(), cols_, "Mat::append_row");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::hstack(const Mat& other) const {
  require_same_size(rows_, other.rows_, "Mat::hstack");
  Mat out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

bool Mat::is_zero() const { return vmrt::is_zero(data_); }

Mat operator*(const Mat& a, const Mat& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_size(a.rows(), b.rows(), "matrix sum rows");
  require_same_size(a.cols(), b.cols(), "matrix sum cols");
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) { return a + Scalar(-1) * b; }

Mat operator*(const Scalar& s, const Mat& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

Vec operator*(const Mat& m, const Vec& v) {
  require_same_size(m.cols(), v.size(), "matrix-vector product");
  Vec out = zeros(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (v[c] != 0) out[r] += m(r, c) * v[c];
    }
  return out;
}

RowEchelon row_reduce(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < a.cols() && next_row < a.rows(); ++c) {
    std::size_t p = next_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != next_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(next_row, k));
    const Scalar inv = 1 / a(next_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(next_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row || a(r, c) == 0) continue;
      const Scalar f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(next_row, k);
    }
    pivots.push_back(c);
    ++next_row;
  }
  Mat reduced(next_row, a.cols());
  for (std::size_t r = 0; r < next_row; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return row_reduce(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(basis, m.cols());
}

SpanSolution solve_in_span(const Mat& basis, std::span<const Scalar> target) {
  require_same_size(basis.rows(), target.size(), "solve_in_span");
  const std::size_t n = basis.cols();
  Mat aug(basis.rows(), n + 1);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = basis(r, c);
    aug(r, n) = target[r];
  }
  const RowEchelon ech = row_reduce(aug);
  Vec coeffs = zeros(n);
  bool consistent = true;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == n) {
      consistent = false;
    } else {
      coeffs[ech.pivots[r]] = ech.reduced(r, n);
    }
  }
  const Vec tgt(target.begin(), target.end());
  SpanSolution out;
  out.residual = tgt - basis * coeffs;
  if (consistent) out.coefficients = std::move(coeffs);
  return out;
}

Vec EchelonBasis::reduce(Vec v) const {
  require_same_size(v.size(), dim_, "EchelonBasis::reduce");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const Scalar f = v[p];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
    }
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  const std::size_t p = normalize_leftmost(v);
  if (p == v.size()) return false;
  // Keep existing rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Scalar f = row[p];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k] != 0) row[k] -= f * v[k];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

Mat EchelonBasis::matrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> rows;
  for (auto i : order) rows.push_back(rows_[i]);
  return Mat::from_rows(rows, dim_);
}

}  // namespace vmrt

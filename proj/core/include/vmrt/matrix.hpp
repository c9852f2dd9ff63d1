#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vmrt/scalar.hpp"

namespace vmrt {

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty = 0);
  static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void append_row(const Vec& row);

  Mat transposed() const;
  /// Columns [0, cols()) followed by the columns of `other`.
  Mat hstack(const Mat& other) const;
  /// All entries read row by row.
  const Vec& entries() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator*(const Scalar& s, const Mat& m);
Vec operator*(const Mat& m, const Vec& v);

/// Reduced row echelon form. Pivots are chosen leftmost-first and rows are
/// consumed top to bottom, so the result is canonical for the row space.
struct RowEchelon {
  Mat reduced;                      // only the nonzero rows are kept
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

RowEchelon row_reduce(const Mat& m);
std::size_t rank(const Mat& m);

/// Basis of {c : m c = 0}, one column per free variable, with that free
/// variable set to 1 and the other free variables set to 0.
Mat kernel_basis(const Mat& m);

/// Result of solving basis * c = target.
///
/// When the target is in the column span, `coefficients` holds the canonical
/// solution: free (non-pivot) coordinates are zero. Otherwise `coefficients`
/// is empty and `residual` is a nonzero witness target - basis * c for the
/// best-effort c read off the consistent rows.
struct SpanSolution {
  std::optional<Vec> coefficients;
  Vec residual;

  bool in_span() const { return coefficients.has_value(); }
  explicit operator bool() const { return in_span(); }
};

SpanSolution solve_in_span(const Mat& basis, std::span<const Scalar> target);

/// Growing row space kept in reduced echelon form. Used to accumulate spans
/// one vector at a time with a deterministic basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds v to the span. Returns true when the rank grew.
  bool insert(Vec v);
  /// Component of v that is not eliminated by the basis pivots.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Rows sorted by pivot column (a reduced echelon matrix).
  Mat matrix() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace vmrt

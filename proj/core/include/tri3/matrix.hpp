#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tri3/rational.hpp"

namespace tri3 {

/// Sparse vector as (index, value) pairs with strictly increasing indices
/// and nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// Each inner vector becomes one row; all rows must have length `cols`.
  static RatMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static RatMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  std::span<const Rational> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(const RatMatrix& m, const Vector& v);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

class Subspace;

/// Incrementally maintained reduced row-echelon form.
///
/// Rows are stored sparse, normalized to a leading 1, and fully reduced
/// against each other after every insertion, so `matrix()` is always the
/// unique RREF of everything added so far.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  /// Returns true if `v` was independent of the rows already present.
  bool add(const Vector& v);
  bool add(const SparseVector& v);

  /// Reduces `v` against the stored rows in place.
  void reduce(Vector& v) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;

  /// RREF rows sorted by pivot column.
  RatMatrix matrix() const;
  /// {x : r.x = 0 for every stored row r}
  Subspace kernel() const;
  /// Row span.
  Subspace span() const;

 private:
  bool insert_reduced(Vector& scratch);

  std::size_t cols_;
  // pivot column -> (row with leading 1 at that column)
  std::vector<std::pair<std::size_t, SparseVector>> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

struct RrefResult {
  RatMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; `reduced` has the same shape as `m`.
RrefResult rref(const RatMatrix& m);

/// {v : m v = 0}
Subspace null_space(const RatMatrix& m);
/// Span of the columns of `m`, as a subspace of Q^rows.
Subspace column_space(const RatMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve(const RatMatrix& m, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace tri3

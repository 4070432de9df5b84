#include "tri3/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tri3/errors.hpp"
#include "tri3/subspace.hpp"

namespace tri3 {

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector RatMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vector(s.begin(), s.end());
}

Vector RatMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void RatMatrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = at(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector operator*(const RatMatrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector product: length mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].add_product(m(r, c), v[c]);
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(a(i, k), b(k, j));
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// RowEchelon

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

bool RowEchelon::add(const Vector& v) {
  if (v.size() != cols_) throw DimensionMismatch("RowEchelon::add: length mismatch");
  Vector scratch = v;
  return insert_reduced(scratch);
}

bool RowEchelon::add(const SparseVector& v) {
  Vector scratch(cols_);
  for (const auto& [j, x] : v) {
    if (j >= cols_) throw DimensionMismatch("RowEchelon::add: index out of range");
    scratch[j] = x;
  }
  return insert_reduced(scratch);
}

void RowEchelon::reduce(Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("RowEchelon::reduce: length mismatch");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    const Rational f = v[p];
    for (const auto& [j, x] : row) v[j].sub_product(f, x);
  }
}

bool RowEchelon::insert_reduced(Vector& scratch) {
  reduce(scratch);
  std::size_t c = 0;
  while (c < cols_ && scratch[c].is_zero()) ++c;
  if (c == cols_) return false;

  const Rational inv = Rational(1) / scratch[c];
  SparseVector fresh;
  for (std::size_t j = c; j < cols_; ++j)
    if (!scratch[j].is_zero()) fresh.emplace_back(j, scratch[j] * inv);

  // Clear column c from the existing rows.
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it == row.end() || it->first != c) continue;
    const Rational g = it->second;
    SparseVector merged;
    merged.reserve(row.size() + fresh.size());
    auto a = row.begin();
    auto b = fresh.begin();
    while (a != row.end() || b != fresh.end()) {
      if (b == fresh.end() || (a != row.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == row.end() || b->first < a->first) {
        merged.emplace_back(b->first, -(g * b->second));
        ++b;
      } else {
        Rational x = a->second;
        x.sub_product(g, b->second);
        if (!x.is_zero()) merged.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }

  row_of_pivot_[c] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.emplace_back(c, std::move(fresh));
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.first);
  std::sort(p.begin(), p.end());
  return p;
}

RatMatrix RowEchelon::matrix() const {
  const auto piv = pivots();
  RatMatrix m(piv.size(), cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (const auto& [j, x] : rows_[static_cast<std::size_t>(row_of_pivot_[piv[i]])].second) m(i, j) = x;
  return m;
}

Subspace RowEchelon::span() const { return Subspace(cols_, matrix(), pivots()); }

Subspace RowEchelon::kernel() const {
  // For each free column f: x_f = 1, x_p = -row_p[f] at every pivot p.
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    Vector v(cols_);
    v[f] = 1;
    for (const auto& [p, row] : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != row.end() && it->first == f) v[p] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols_, basis);
}

// ---------------------------------------------------------------------------

RrefResult rref(const RatMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  RrefResult out;
  out.pivots = e.pivots();
  out.rank = out.pivots.size();
  out.reduced = RatMatrix(m.rows(), m.cols());
  const RatMatrix reduced = e.matrix();
  for (std::size_t r = 0; r < reduced.rows(); ++r)
    for (std::size_t c = 0; c < reduced.cols(); ++c) out.reduced(r, c) = reduced(r, c);
  return out;
}

Subspace null_space(const RatMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  return e.kernel();
}

Subspace column_space(const RatMatrix& m) {
  RowEchelon e(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) e.add(m.column(c));
  return e.span();
}

std::optional<Vector> solve(const RatMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  RowEchelon e(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    e.add(row);
  }
  const RatMatrix red = e.matrix();
  const auto piv = e.pivots();
  Vector x(n);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == n) return std::nullopt;
    x[piv[i]] = red(i, n);
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RowEchelon e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    row.resize(2 * n);
    row[n + r] = 1;
    e.add(row);
  }
  const auto piv = e.pivots();
  if (piv.size() != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
  const RatMatrix red = e.matrix();
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

}  // namespace tri3

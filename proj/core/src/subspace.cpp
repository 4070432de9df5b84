#include "tri3/subspace.hpp"

#include "tri3/errors.hpp"

namespace tri3 {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                            " and " + std::to_string(v.ambient_dim()) + " differ");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, RatMatrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(ambient_dim, RatMatrix::identity(ambient_dim), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  RowEchelon e(ambient_dim);
  for (const auto& v : vectors) e.add(v);
  return e.span();
}

Subspace Subspace::row_span(const RatMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  return e.span();
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& w) const {
  if (w.size() != ambient_) throw DimensionMismatch("Subspace::contains: vector length mismatch");
  // In RREF coordinates are the pivot entries; w is inside iff it equals
  // the combination they determine.
  Vector residual = w;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j].sub_product(f, basis_(i, j));
  }
  return is_zero(residual);
}

Vector Subspace::coordinates(const Vector& w) const {
  if (!contains(w)) throw PreconditionError("Subspace::coordinates: vector is not in the subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = w[pivots_[i]];
  return c;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "sum");
  RowEchelon e(u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i) e.add(u.basis().row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) e.add(v.basis().row(i));
  return e.span();
}

Subspace annihilator(const Subspace& u) { return null_space(u.basis()); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "intersect");
  RowEchelon constraints(u.ambient_dim());
  for (const auto& w : annihilator(u).basis_vectors()) constraints.add(w);
  for (const auto& w : annihilator(v).basis_vectors()) constraints.add(w);
  return constraints.kernel();
}

bool is_subset(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "is_subset");
  if (u.dim() > v.dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!v.contains(u.basis().row(i))) return false;
  return true;
}

std::size_t quotient_dim(const Subspace& small, const Subspace& big) {
  require_same_ambient(small, big, "quotient_dim");
  if (!is_subset(small, big)) throw PreconditionError("quotient_dim: subspace is not contained in the ambient space");
  return big.dim() - small.dim();
}

Subspace direct_sum(const std::vector<Subspace>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.ambient_dim();
  std::vector<Vector> vectors;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      Vector v(total);
      for (std::size_t j = 0; j < p.ambient_dim(); ++j) v[offset + j] = p.basis()(i, j);
      vectors.push_back(std::move(v));
    }
    offset += p.ambient_dim();
  }
  return Subspace::span(total, vectors);
}

}  // namespace tri3

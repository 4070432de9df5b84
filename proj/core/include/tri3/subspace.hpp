#pragma once

#include <cstddef>
#include <vector>

#include "tri3/matrix.hpp"

namespace tri3 {

/// Subspace of Q^n represented by its canonical RREF basis.
///
/// Two Subspace values compare equal exactly when they are the same
/// subspace, since the basis is the unique RREF of any spanning set.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Row span of `m`.
  static Subspace row_span(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vector& w) const;
  /// Coordinates of `w` in the RREF basis. Requires contains(w).
  Vector coordinates(const Vector& w) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class RowEchelon;
  Subspace(std::size_t ambient, RatMatrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  RatMatrix basis_{0, 0};
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool is_subset(const Subspace& u, const Subspace& v);
/// dim(big) - dim(small). Throws PreconditionError unless small is a subset
/// of big, DimensionMismatch on differing ambient dimensions.
std::size_t quotient_dim(const Subspace& small, const Subspace& big);

/// Orthogonal complement under the standard dot product.
Subspace annihilator(const Subspace& u);

/// U1 (+) U2 (+) ... inside Q^{n1 + n2 + ...}, blocks in argument order.
Subspace direct_sum(const std::vector<Subspace>& parts);

}  // namespace tri3

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tri3/algebra.hpp"
#include "tri3/triangular.hpp"

namespace tri3 {

/// Square matrix acting on coordinate vectors; column j is the image of e_j.
struct LinearMap {
  RatMatrix matrix;

  static LinearMap zero(std::size_t n) { return {RatMatrix(n, n)}; }
  static LinearMap identity(std::size_t n) { return {RatMatrix::identity(n)}; }
  /// Inverse of vectorize().
  static LinearMap from_vector(std::size_t n, const Vector& v);

  std::size_t dim() const { return matrix.rows(); }
  Vector operator()(const Vector& v) const { return matrix * v; }
  Vector image(std::size_t j) const { return matrix.column(j); }
  /// Column-stacked: entry (r, c) lands at index c * dim + r.
  Vector vectorize() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Rational& s, const LinearMap& f);

/// Subspace of End(Q^n) in the column-stacked vectorization.
struct MapSpace {
  std::size_t n = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const LinearMap& f) const { return space.contains(f.vectorize()); }
  LinearMap basis_map(std::size_t i) const { return LinearMap::from_vector(n, space.basis_vector(i)); }
};

/// Der(alg): null space of every Leibniz constraint on ordered basis pairs.
MapSpace derivation_space(const StructureAlgebra& alg);
/// Inn(alg): span of w -> w t - t w over t in alg.
MapSpace inner_derivation_space(const StructureAlgebra& alg);
/// dim Der - dim Inn. Throws InvariantViolation if Inn is not inside Der.
std::size_t h1_dim(const StructureAlgebra& alg);

/// w -> w t - t w
LinearMap inner_derivation(const StructureAlgebra& alg, const Vector& t);

bool is_derivation(const StructureAlgebra& alg, const LinearMap& f);
/// First ordered basis pair (i, j) where the Leibniz rule fails.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const StructureAlgebra& alg,
                                                                    const LinearMap& f);

/// Transports structure constants to the basis f_i = sum_r g(r, i) e_r.
/// Throws PreconditionError if g is singular.
StructureAlgebra change_basis(const StructureAlgebra& alg, const RatMatrix& g);

// ---------------------------------------------------------------------------
// Triangular-specific decomposition

/// The six diagonal pieces of a derivation of T.
struct DiagonalParts {
  LinearMap dA, dB, dC;
  LinearMap tauM, tauP, tauN;

  static DiagonalParts zero(const TriAlgebra& t);
};

/// Diagonal pieces plus the three off-diagonal elements m_D, p_D, n_D.
struct CornerData {
  DiagonalParts parts;
  Vector mD, pD, nD;

  static CornerData zero(const TriAlgebra& t);
};

/// A derivation of T violated one of the nine block-structure statements.
class CornerStructureError : public std::runtime_error {
 public:
  CornerStructureError(int case_number, const std::string& what)
      : std::runtime_error("block case (" + std::to_string(case_number) + "): " + what), case_(case_number) {}
  int case_number() const { return case_; }

 private:
  int case_;
};

/// Reads the corner data off a derivation of T, verifying every zero block
/// and cross term along the way. Requires unital A, B, C.
CornerData extract_corners(const TriAlgebra& t, const LinearMap& d);

/// D(a,m,p,b,n,c) = (D_A a, a m_D - m_D b + tau_M m,
///                   a p_D - p_D c - mu(m_D, n) + mu(m, n_D) + tau_P p,
///                   D_B b, b n_D - n_D c + tau_N n, D_C c)
LinearMap reconstruct(const TriAlgebra& t, const CornerData& c);

/// The six derivation-twisted module identities linking tau_M, tau_P,
/// tau_N to D_A, D_B, D_C, checked on all basis pairs.
ValidationReport check_corner_identities(const TriAlgebra& t, const DiagonalParts& parts);
inline ValidationReport check_corner_identities(const TriAlgebra& t, const CornerData& c) {
  return check_corner_identities(t, c.parts);
}

/// tau_P(mu(m, n)) = mu(tau_M m, n) + mu(m, tau_N n) on all basis pairs.
ValidationReport check_mu_compatibility(const TriAlgebra& t, const LinearMap& tauM, const LinearMap& tauP,
                                        const LinearMap& tauN);

/// Block-diagonal map with no precondition checks.
LinearMap block_diagonal_map(const TriAlgebra& t, const DiagonalParts& parts);

/// Checked block-diagonal assembly: throws PreconditionError naming the
/// failed hypothesis, and InvariantViolation if the result is somehow not a
/// derivation.
LinearMap assemble_diagonal(const TriAlgebra& t, const DiagonalParts& parts);

}  // namespace tri3

#pragma once

#include <cstddef>
#include <optional>

#include "tri3/derivation.hpp"

namespace tri3 {

/// (phi, theta, psi) acting on (M, P, N).
struct HomTriple {
  LinearMap phi;
  LinearMap theta;
  LinearMap psi;

  static HomTriple zero(const TriSystem& sys);
  /// Splits a concatenated (phi | theta | psi) vector.
  static HomTriple from_vector(const TriSystem& sys, const Vector& v);
  Vector vectorize() const;

  friend bool operator==(const HomTriple&, const HomTriple&) = default;
};

/// Subspace of Q^{dM^2 + dP^2 + dN^2}, blocks ordered phi, theta, psi.
struct TripleSpace {
  std::size_t dm = 0, dp = 0, dn = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const HomTriple& t) const { return space.contains(t.vectorize()); }
};

/// Hom_{left,right}(mod): maps commuting with both actions.
MapSpace hom_space(const Bimodule& mod);

/// m -> m y - x m
LinearMap rosenblum_operator(const Bimodule& mod, const Vector& x, const Vector& y);

/// Span of the central Rosenblum operators m -> m y - x m with x, y central.
MapSpace zr_space(const Bimodule& mod);

/// Hom(M) (+) Hom(P) (+) Hom(N)
TripleSpace hom_triple_space(const TriSystem& sys);
/// ZR(M) (+) ZR(P) (+) ZR(N), three independent Rosenblum spaces.
TripleSpace zr_triple_space(const TriSystem& sys);

/// Triples (tau_M^{x,y}, tau_P^{x,z}, tau_N^{y,z}) sharing one central
/// (x, y, z).
TripleSpace joint_rosenblum(const TriSystem& sys);

/// Null space of the mu-compatibility constraints alone, before
/// intersecting with the Hom triples.
TripleSpace mu_compatibility_space(const TriSystem& sys);

/// Hom triples satisfying theta(mu(m, n)) = mu(phi m, n) + mu(m, psi n).
/// Solved as one combined linear system.
TripleSpace compatible_triples(const TriSystem& sys);

ValidationReport check_triple_compatibility(const TriSystem& sys, const HomTriple& triple);

/// Block map (a,m,p,b,n,c) -> (0, phi m, theta p, 0, psi n, 0), unchecked.
LinearMap triple_map(const TriAlgebra& t, const HomTriple& triple);

/// Checked version of triple_map: throws PreconditionError if a member
/// leaves its Hom space or compatibility fails.
LinearMap build_triple_derivation(const TriAlgebra& t, const HomTriple& triple);

struct InnerWitness {
  Vector x, y, z;
  /// diag(x, y, z) as an element of T.
  Vector element;
};

/// A central (x, y, z) whose inner derivation equals the triple's block map,
/// or nullopt if none exists.
std::optional<InnerWitness> is_inner_triple(const TriAlgebra& t, const HomTriple& triple);

}  // namespace tri3

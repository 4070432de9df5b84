#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tri3/triangular.hpp"

namespace tri3 {

/// An algebra given as a multiplicatively closed span of s x s matrices,
/// together with its structure constants in that basis.
struct MatrixAlgebra {
  std::size_t size = 0;
  std::vector<RatMatrix> basis;
  std::shared_ptr<const StructureAlgebra> algebra;
};

/// Structure constants of span(basis); throws PreconditionError if the span
/// is not closed under multiplication or the matrices are dependent. The
/// unit is recorded when the identity matrix lies in the span.
MatrixAlgebra matrix_algebra(std::string name, std::size_t size, std::vector<RatMatrix> basis);

MatrixAlgebra rationals(std::string name = "Q");
/// Q^n with componentwise product (diagonal n x n matrices).
MatrixAlgebra diagonal_algebra(std::size_t n, std::string name = {});
/// M_k(Q) with matrix units E_ij at index i*k + j.
MatrixAlgebra full_matrix_algebra(std::size_t k, std::string name = {});
/// Upper-triangular k x k matrices, E_ij (i <= j) in row-major order.
MatrixAlgebra upper_triangular_algebra(std::size_t k, std::string name = {});

/// s_left x s_right matrices with left multiplication by `left` and right
/// multiplication by `right`; basis E_ij at index i*s_right + j.
std::shared_ptr<const Bimodule> rectangular_bimodule(std::string name, const MatrixAlgebra& left,
                                                     const MatrixAlgebra& right);

/// Q^dim over one-dimensional unital algebras, both acting by scalars.
std::shared_ptr<const Bimodule> scalar_bimodule(std::string name, std::size_t dim,
                                                std::shared_ptr<const StructureAlgebra> left,
                                                std::shared_ptr<const StructureAlgebra> right);

/// mu(X, Y) = scale * X Y for rectangular bimodules built over realized
/// matrix algebras with shapes (sa x sb), (sb x sc), (sa x sc).
std::shared_ptr<const Pairing> matrix_product_pairing(std::shared_ptr<const Bimodule> M,
                                                      std::shared_ptr<const Bimodule> N,
                                                      std::shared_ptr<const Bimodule> P, std::size_t sa,
                                                      std::size_t sb, std::size_t sc, const Rational& scale);

/// Pairing with an explicit tensor.
std::shared_ptr<const Pairing> tensor_pairing(std::shared_ptr<const Bimodule> M, std::shared_ptr<const Bimodule> N,
                                              std::shared_ptr<const Bimodule> P, Tensor3 tensor);

/// A = B = C = Q, M = N = P = Q, mu = scale * multiplication. scale 1 gives
/// the upper-triangular 3x3 matrices.
TriSystem scalar_system(const Rational& mu_scale);

/// A = B = C = Q, M = Q^dm, P = Q^dp, N = Q^dn, zero pairing.
TriSystem scalar_tower_system(std::size_t dm, std::size_t dp, std::size_t dn);

}  // namespace tri3

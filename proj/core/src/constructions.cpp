#include "tri3/constructions.hpp"

#include "tri3/errors.hpp"

namespace tri3 {

namespace {

Vector flatten(const RatMatrix& m) {
  Vector v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

RatMatrix matrix_unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  RatMatrix e(rows, cols);
  e(i, j) = 1;
  return e;
}

}  // namespace

MatrixAlgebra matrix_algebra(std::string name, std::size_t size, std::vector<RatMatrix> basis) {
  const std::size_t d = basis.size();
  std::vector<Vector> cols;
  for (const auto& b : basis) {
    if (b.rows() != size || b.cols() != size) throw DimensionMismatch("matrix_algebra: basis matrix has wrong size");
    cols.push_back(flatten(b));
  }
  const RatMatrix coords = RatMatrix::from_columns(size * size, cols);
  if (column_space(coords).dim() != d) throw PreconditionError("matrix_algebra: basis matrices are dependent");

  auto alg = std::make_shared<StructureAlgebra>();
  alg->name = std::move(name);
  alg->dim = d;
  alg->mult = Tensor3(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto x = solve(coords, flatten(basis[i] * basis[j]));
      if (!x) throw PreconditionError("matrix_algebra: span is not closed under multiplication");
      for (std::size_t k = 0; k < d; ++k) alg->mult(i, j, k) = (*x)[k];
    }
  if (auto u = solve(coords, flatten(RatMatrix::identity(size)))) alg->unit = *u;
  return {size, std::move(basis), std::move(alg)};
}

MatrixAlgebra rationals(std::string name) { return matrix_algebra(std::move(name), 1, {RatMatrix::identity(1)}); }

MatrixAlgebra diagonal_algebra(std::size_t n, std::string name) {
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(matrix_unit(n, n, i, i));
  return matrix_algebra(name.empty() ? "Q^" + std::to_string(n) : std::move(name), n, std::move(basis));
}

MatrixAlgebra full_matrix_algebra(std::size_t k, std::string name) {
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis.push_back(matrix_unit(k, k, i, j));
  return matrix_algebra(name.empty() ? "M_" + std::to_string(k) : std::move(name), k, std::move(basis));
}

MatrixAlgebra upper_triangular_algebra(std::size_t k, std::string name) {
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) basis.push_back(matrix_unit(k, k, i, j));
  return matrix_algebra(name.empty() ? "T_" + std::to_string(k) : std::move(name), k, std::move(basis));
}

std::shared_ptr<const Bimodule> rectangular_bimodule(std::string name, const MatrixAlgebra& left,
                                                     const MatrixAlgebra& right) {
  const std::size_t sl = left.size, sr = right.size, d = sl * sr;
  auto mod = std::make_shared<Bimodule>();
  mod->name = std::move(name);
  mod->dim = d;
  mod->left = left.algebra;
  mod->right = right.algebra;
  mod->left_action = Tensor3(left.basis.size(), d, d);
  mod->right_action = Tensor3(d, right.basis.size(), d);
  for (std::size_t j = 0; j < d; ++j) {
    const RatMatrix e = matrix_unit(sl, sr, j / sr, j % sr);
    for (std::size_t i = 0; i < left.basis.size(); ++i) {
      const Vector img = flatten(left.basis[i] * e);
      for (std::size_t k = 0; k < d; ++k) mod->left_action(i, j, k) = img[k];
    }
    for (std::size_t i = 0; i < right.basis.size(); ++i) {
      const Vector img = flatten(e * right.basis[i]);
      for (std::size_t k = 0; k < d; ++k) mod->right_action(j, i, k) = img[k];
    }
  }
  return mod;
}

std::shared_ptr<const Bimodule> scalar_bimodule(std::string name, std::size_t dim,
                                                std::shared_ptr<const StructureAlgebra> left,
                                                std::shared_ptr<const StructureAlgebra> right) {
  if (left->dim != 1 || right->dim != 1 || !left->unit || !right->unit)
    throw PreconditionError("scalar_bimodule: acting algebras must be one-dimensional and unital");
  // The basis vector of a one-dimensional unital algebra is unit/u0, so it
  // acts as the scalar 1/u0.
  const Rational sl = Rational(1) / (*left->unit)[0];
  const Rational sr = Rational(1) / (*right->unit)[0];
  auto mod = std::make_shared<Bimodule>();
  mod->name = std::move(name);
  mod->dim = dim;
  mod->left = std::move(left);
  mod->right = std::move(right);
  mod->left_action = Tensor3(1, dim, dim);
  mod->right_action = Tensor3(dim, 1, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    mod->left_action(0, j, j) = sl;
    mod->right_action(j, 0, j) = sr;
  }
  return mod;
}

std::shared_ptr<const Pairing> matrix_product_pairing(std::shared_ptr<const Bimodule> M,
                                                      std::shared_ptr<const Bimodule> N,
                                                      std::shared_ptr<const Bimodule> P, std::size_t sa,
                                                      std::size_t sb, std::size_t sc, const Rational& scale) {
  if (M->dim != sa * sb || N->dim != sb * sc || P->dim != sa * sc)
    throw DimensionMismatch("matrix_product_pairing: module dims do not match the matrix shapes");
  Tensor3 t(M->dim, N->dim, P->dim);
  // E_ij * E_jl = E_il
  for (std::size_t i = 0; i < sa; ++i)
    for (std::size_t j = 0; j < sb; ++j)
      for (std::size_t l = 0; l < sc; ++l) t(i * sb + j, j * sc + l, i * sc + l) = scale;
  return tensor_pairing(std::move(M), std::move(N), std::move(P), std::move(t));
}

std::shared_ptr<const Pairing> tensor_pairing(std::shared_ptr<const Bimodule> M, std::shared_ptr<const Bimodule> N,
                                              std::shared_ptr<const Bimodule> P, Tensor3 tensor) {
  auto mu = std::make_shared<Pairing>();
  mu->module_m = std::move(M);
  mu->module_n = std::move(N);
  mu->module_p = std::move(P);
  mu->tensor = std::move(tensor);
  return mu;
}

TriSystem scalar_system(const Rational& mu_scale) {
  const auto A = rationals("A"), B = rationals("B"), C = rationals("C");
  auto M = rectangular_bimodule("M", A, B);
  auto N = rectangular_bimodule("N", B, C);
  auto P = rectangular_bimodule("P", A, C);
  auto mu = matrix_product_pairing(M, N, P, 1, 1, 1, mu_scale);
  return make_system(A.algebra, B.algebra, C.algebra, M, N, P, mu);
}

TriSystem scalar_tower_system(std::size_t dm, std::size_t dp, std::size_t dn) {
  const auto A = rationals("A"), B = rationals("B"), C = rationals("C");
  return make_system(A.algebra, B.algebra, C.algebra, scalar_bimodule("M", dm, A.algebra, B.algebra),
                     scalar_bimodule("N", dn, B.algebra, C.algebra), scalar_bimodule("P", dp, A.algebra, C.algebra));
}

}  // namespace tri3

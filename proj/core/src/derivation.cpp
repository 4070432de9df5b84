#include "tri3/derivation.hpp"

#include <map>

#include "tri3/errors.hpp"

namespace tri3 {

LinearMap LinearMap::from_vector(std::size_t n, const Vector& v) {
  if (v.size() != n * n) throw DimensionMismatch("LinearMap::from_vector: length != n^2");
  LinearMap f = zero(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) f.matrix(r, c) = v[c * n + r];
  return f;
}

Vector LinearMap::vectorize() const {
  const std::size_t n = dim();
  Vector v(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) v[c * n + r] = matrix(r, c);
  return v;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) { return {a.matrix + b.matrix}; }
LinearMap operator-(const LinearMap& a, const LinearMap& b) { return {a.matrix - b.matrix}; }
LinearMap operator*(const Rational& s, const LinearMap& f) {
  LinearMap out = f;
  for (std::size_t r = 0; r < out.dim(); ++r)
    for (std::size_t c = 0; c < out.dim(); ++c) out.matrix(r, c) *= s;
  return out;
}

// ---------------------------------------------------------------------------
// Generic engine

namespace {

using Entries = std::vector<std::pair<std::size_t, Rational>>;

SparseVector collect(std::map<std::size_t, Rational>& acc) {
  SparseVector row;
  for (auto& [j, x] : acc)
    if (!x.is_zero()) row.emplace_back(j, std::move(x));
  acc.clear();
  return row;
}

}  // namespace

MapSpace derivation_space(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  const Tensor3& c = alg.mult;
  // Nonzero slices of the structure tensor, indexed three ways.
  std::vector<Entries> by_ij(d * d), by_jk(d * d), by_ik(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& x = c(i, j, k);
        if (x.is_zero()) continue;
        by_ij[i * d + j].emplace_back(k, x);  // e_i e_j has e_k-coefficient x
        by_jk[j * d + k].emplace_back(i, x);  // e_i e_j -> e_k, grouped by (j,k)
        by_ik[i * d + k].emplace_back(j, x);  // grouped by (i,k)
      }

  // Unknown D(r, s) (image of e_s, coordinate r) sits at s*d + r. For every
  // ordered pair (i, j) and output coordinate k:
  //   sum_l c(i,j,l) D(k,l) - sum_r D(r,i) c(r,j,k) - sum_r D(r,j) c(i,r,k) = 0
  RowEchelon system(d * d);
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& [l, x] : by_ij[i * d + j]) acc[l * d + k] += x;
        for (const auto& [r, x] : by_jk[j * d + k]) acc[i * d + r] -= x;
        for (const auto& [r, x] : by_ik[i * d + k]) acc[j * d + r] -= x;
        SparseVector row = collect(acc);
        if (!row.empty()) system.add(row);
      }
  return {d, system.kernel()};
}

LinearMap inner_derivation(const StructureAlgebra& alg, const Vector& t) {
  if (t.size() != alg.dim) throw DimensionMismatch("inner_derivation: element length != dim");
  LinearMap f = LinearMap::zero(alg.dim);
  for (std::size_t j = 0; j < alg.dim; ++j) {
    const Vector e = unit_vector(alg.dim, j);
    f.matrix.set_column(j, multiply(alg, e, t) - multiply(alg, t, e));
  }
  return f;
}

MapSpace inner_derivation_space(const StructureAlgebra& alg) {
  std::vector<Vector> spanning;
  for (std::size_t s = 0; s < alg.dim; ++s)
    spanning.push_back(inner_derivation(alg, unit_vector(alg.dim, s)).vectorize());
  return {alg.dim, Subspace::span(alg.dim * alg.dim, spanning)};
}

std::size_t h1_dim(const StructureAlgebra& alg) {
  const MapSpace der = derivation_space(alg);
  const MapSpace inn = inner_derivation_space(alg);
  if (!is_subset(inn.space, der.space))
    throw InvariantViolation("inner derivations of '" + alg.name + "' are not contained in Der");
  return quotient_dim(inn.space, der.space);
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const StructureAlgebra& alg,
                                                                    const LinearMap& f) {
  if (f.dim() != alg.dim) throw DimensionMismatch("is_derivation: map dimension != algebra dimension");
  const std::size_t d = alg.dim;
  std::vector<Vector> images(d);
  for (std::size_t j = 0; j < d; ++j) images[j] = f.image(j);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
      const Vector lhs = f(alg.mult.fiber(i, j));
      const Vector rhs = multiply(alg, images[i], ej) + multiply(alg, ei, images[j]);
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_derivation(const StructureAlgebra& alg, const LinearMap& f) { return !leibniz_failure(alg, f).has_value(); }

StructureAlgebra change_basis(const StructureAlgebra& alg, const RatMatrix& g) {
  const std::size_t d = alg.dim;
  if (g.rows() != d || g.cols() != d) throw DimensionMismatch("change_basis: matrix is not dim x dim");
  const auto ginv = inverse(g);
  if (!ginv) throw PreconditionError("change_basis: matrix is singular");
  StructureAlgebra out;
  out.name = alg.name;
  out.dim = d;
  out.mult = Tensor3(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector prod = *ginv * multiply(alg, g.column(i), g.column(j));
      for (std::size_t k = 0; k < d; ++k) out.mult(i, j, k) = prod[k];
    }
  if (alg.unit) out.unit = *ginv * *alg.unit;
  return out;
}

// ---------------------------------------------------------------------------
// Corner decomposition

namespace {

void require_square(const LinearMap& f, std::size_t n, const char* what) {
  if (f.dim() != n || f.matrix.cols() != n)
    throw DimensionMismatch(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                            " map");
}

void require_dims(const TriAlgebra& t, const DiagonalParts& p) {
  require_square(p.dA, t.block_dim(Block::A), "D_A");
  require_square(p.dB, t.block_dim(Block::B), "D_B");
  require_square(p.dC, t.block_dim(Block::C), "D_C");
  require_square(p.tauM, t.block_dim(Block::M), "tau_M");
  require_square(p.tauP, t.block_dim(Block::P), "tau_P");
  require_square(p.tauN, t.block_dim(Block::N), "tau_N");
}

void require_dims(const TriAlgebra& t, const CornerData& c) {
  require_dims(t, c.parts);
  if (c.mD.size() != t.block_dim(Block::M) || c.pD.size() != t.block_dim(Block::P) ||
      c.nD.size() != t.block_dim(Block::N))
    throw DimensionMismatch("corner elements m_D, p_D, n_D do not match the module dimensions");
}

/// Checks the block layout of D(x) for one basis element x against the
/// expected values; blocks absent from `expected` must vanish.
class CaseCheck {
 public:
  CaseCheck(const TriAlgebra& t, int case_number, std::string element, Vector image)
      : t_(t), case_(case_number), element_(std::move(element)), image_(std::move(image)) {}

  Vector block(Block b) const { return project_block(t_, b, image_); }

  void expect(Block b, const Vector& value, const char* what) const {
    if (block(b) != value)
      throw CornerStructureError(case_, std::string(block_name(b)) + "-component of D(" + element_ + ") is " +
                                            to_string(block(b)) + ", expected " + what + " = " + to_string(value));
  }
  void expect_zero(std::initializer_list<Block> blocks) const {
    for (Block b : blocks)
      if (!is_zero(block(b)))
        throw CornerStructureError(case_, std::string(block_name(b)) + "-component of D(" + element_ +
                                              ") should vanish but is " + to_string(block(b)));
  }

 private:
  const TriAlgebra& t_;
  int case_;
  std::string element_;
  Vector image_;
};

std::string basis_label(const char* sym, std::size_t i) { return std::string(sym) + "_" + std::to_string(i); }

}  // namespace

DiagonalParts DiagonalParts::zero(const TriAlgebra& t) {
  return {LinearMap::zero(t.block_dim(Block::A)), LinearMap::zero(t.block_dim(Block::B)),
          LinearMap::zero(t.block_dim(Block::C)), LinearMap::zero(t.block_dim(Block::M)),
          LinearMap::zero(t.block_dim(Block::P)), LinearMap::zero(t.block_dim(Block::N))};
}

CornerData CornerData::zero(const TriAlgebra& t) {
  return {DiagonalParts::zero(t), zero_vector(t.block_dim(Block::M)), zero_vector(t.block_dim(Block::P)),
          zero_vector(t.block_dim(Block::N))};
}

CornerData extract_corners(const TriAlgebra& t, const LinearMap& d) {
  const TriSystem& sys = t.system;
  if (!sys.unital()) throw PreconditionError("extract_corners: A, B and C must all be unital");
  if (d.dim() != t.dim()) throw DimensionMismatch("extract_corners: map dimension != dim T");
  if (auto bad = leibniz_failure(t.algebra, d))
    throw PreconditionError("extract_corners: map is not a derivation (Leibniz fails at basis pair (" +
                            std::to_string(bad->first) + "," + std::to_string(bad->second) + "))");

  const Bimodule &modM = *sys.M, &modN = *sys.N, &modP = *sys.P;
  const Pairing& mu = *sys.mu;
  using enum Block;

  CornerData out = CornerData::zero(t);
  auto image_of = [&](Block b, const Vector& v) { return d(embed_block(t, b, v)); };

  const CaseCheck unitA(t, 1, "e_A", image_of(A, *sys.A->unit));
  unitA.expect_zero({A, B, N, C});
  out.mD = unitA.block(M);
  out.pD = unitA.block(P);

  const CaseCheck unitB(t, 3, "e_B", image_of(B, *sys.B->unit));
  unitB.expect_zero({A, P, B, C});
  unitB.expect(M, -Rational(1) * out.mD, "-m_D");
  out.nD = unitB.block(N);

  const CaseCheck unitC(t, 5, "e_C", image_of(C, *sys.C->unit));
  unitC.expect_zero({A, M, B, C});
  unitC.expect(P, -Rational(1) * out.pD, "-p_D");
  unitC.expect(N, -Rational(1) * out.nD, "-n_D");

  for (std::size_t i = 0; i < t.block_dim(A); ++i) {
    const Vector a = unit_vector(t.block_dim(A), i);
    const CaseCheck ck(t, 2, basis_label("a", i), image_of(A, a));
    ck.expect_zero({B, N, C});
    ck.expect(M, left_act(modM, a, out.mD), "a m_D");
    ck.expect(P, left_act(modP, a, out.pD), "a p_D");
    out.parts.dA.matrix.set_column(i, ck.block(A));
  }
  for (std::size_t i = 0; i < t.block_dim(B); ++i) {
    const Vector b = unit_vector(t.block_dim(B), i);
    const CaseCheck ck(t, 4, basis_label("b", i), image_of(B, b));
    ck.expect_zero({A, P, C});
    ck.expect(M, -Rational(1) * right_act(modM, out.mD, b), "-m_D b");
    ck.expect(N, left_act(modN, b, out.nD), "b n_D");
    out.parts.dB.matrix.set_column(i, ck.block(B));
  }
  for (std::size_t i = 0; i < t.block_dim(C); ++i) {
    const Vector c = unit_vector(t.block_dim(C), i);
    const CaseCheck ck(t, 6, basis_label("c", i), image_of(C, c));
    ck.expect_zero({A, M, B});
    ck.expect(P, -Rational(1) * right_act(modP, out.pD, c), "-p_D c");
    ck.expect(N, -Rational(1) * right_act(modN, out.nD, c), "-n_D c");
    out.parts.dC.matrix.set_column(i, ck.block(C));
  }
  for (std::size_t i = 0; i < t.block_dim(M); ++i) {
    const Vector m = unit_vector(t.block_dim(M), i);
    const CaseCheck ck(t, 7, basis_label("m", i), image_of(M, m));
    ck.expect_zero({A, B, N, C});
    ck.expect(P, pair(mu, m, out.nD), "mu(m, n_D)");
    out.parts.tauM.matrix.set_column(i, ck.block(M));
  }
  for (std::size_t i = 0; i < t.block_dim(P); ++i) {
    const Vector p = unit_vector(t.block_dim(P), i);
    const CaseCheck ck(t, 8, basis_label("p", i), image_of(P, p));
    ck.expect_zero({A, M, B, N, C});
    out.parts.tauP.matrix.set_column(i, ck.block(P));
  }
  for (std::size_t i = 0; i < t.block_dim(N); ++i) {
    const Vector n = unit_vector(t.block_dim(N), i);
    const CaseCheck ck(t, 9, basis_label("n", i), image_of(N, n));
    ck.expect_zero({A, M, B, C});
    ck.expect(P, -Rational(1) * pair(mu, out.mD, n), "mu(-m_D, n)");
    out.parts.tauN.matrix.set_column(i, ck.block(N));
  }

  if (!is_derivation(*sys.A, out.parts.dA)) throw CornerStructureError(2, "extracted D_A is not a derivation of A");
  if (!is_derivation(*sys.B, out.parts.dB)) throw CornerStructureError(4, "extracted D_B is not a derivation of B");
  if (!is_derivation(*sys.C, out.parts.dC)) throw CornerStructureError(6, "extracted D_C is not a derivation of C");
  return out;
}

LinearMap reconstruct(const TriAlgebra& t, const CornerData& cd) {
  require_dims(t, cd);
  const TriSystem& sys = t.system;
  const Bimodule &modM = *sys.M, &modN = *sys.N, &modP = *sys.P;
  const Pairing& mu = *sys.mu;
  const DiagonalParts& p = cd.parts;
  using enum Block;

  LinearMap out = LinearMap::zero(t.dim());
  auto set = [&](Block from, std::size_t i, const Vector& image) {
    out.matrix.set_column(t.offset(from) + i, image);
  };
  for (std::size_t i = 0; i < t.block_dim(A); ++i) {
    const Vector a = unit_vector(t.block_dim(A), i);
    set(A, i, embed_block(t, A, p.dA.image(i)) + embed_block(t, M, left_act(modM, a, cd.mD)) +
                  embed_block(t, P, left_act(modP, a, cd.pD)));
  }
  for (std::size_t i = 0; i < t.block_dim(M); ++i) {
    const Vector m = unit_vector(t.block_dim(M), i);
    set(M, i, embed_block(t, M, p.tauM.image(i)) + embed_block(t, P, pair(mu, m, cd.nD)));
  }
  for (std::size_t i = 0; i < t.block_dim(P); ++i) set(P, i, embed_block(t, P, p.tauP.image(i)));
  for (std::size_t i = 0; i < t.block_dim(B); ++i) {
    const Vector b = unit_vector(t.block_dim(B), i);
    set(B, i, embed_block(t, B, p.dB.image(i)) - embed_block(t, M, right_act(modM, cd.mD, b)) +
                  embed_block(t, N, left_act(modN, b, cd.nD)));
  }
  for (std::size_t i = 0; i < t.block_dim(N); ++i) {
    const Vector n = unit_vector(t.block_dim(N), i);
    set(N, i, embed_block(t, N, p.tauN.image(i)) - embed_block(t, P, pair(mu, cd.mD, n)));
  }
  for (std::size_t i = 0; i < t.block_dim(C); ++i) {
    const Vector c = unit_vector(t.block_dim(C), i);
    set(C, i, embed_block(t, C, p.dC.image(i)) - embed_block(t, P, right_act(modP, cd.pD, c)) -
                  embed_block(t, N, right_act(modN, cd.nD, c)));
  }
  return out;
}

ValidationReport check_corner_identities(const TriAlgebra& t, const DiagonalParts& p) {
  require_dims(t, p);
  const TriSystem& sys = t.system;
  ValidationReport report;

  // tau(x . v) = D(x) . v + x . tau(v), algebra acting on the left
  auto left_rule = [&](const char* label, const StructureAlgebra& alg, const LinearMap& dAlg, const Bimodule& mod,
                       const LinearMap& tau) {
    for (std::size_t i = 0; i < alg.dim; ++i)
      for (std::size_t j = 0; j < mod.dim; ++j) {
        const Vector x = unit_vector(alg.dim, i), v = unit_vector(mod.dim, j);
        const Vector lhs = tau(left_act(mod, x, v));
        const Vector rhs = left_act(mod, dAlg(x), v) + left_act(mod, x, tau(v));
        if (lhs != rhs) report.add(label, {i, j});
      }
  };
  // tau(v . x) = v . D(x) + tau(v) . x, algebra acting on the right
  auto right_rule = [&](const char* label, const Bimodule& mod, const LinearMap& tau, const StructureAlgebra& alg,
                        const LinearMap& dAlg) {
    for (std::size_t i = 0; i < mod.dim; ++i)
      for (std::size_t j = 0; j < alg.dim; ++j) {
        const Vector v = unit_vector(mod.dim, i), x = unit_vector(alg.dim, j);
        const Vector lhs = tau(right_act(mod, v, x));
        const Vector rhs = right_act(mod, v, dAlg(x)) + right_act(mod, tau(v), x);
        if (lhs != rhs) report.add(label, {i, j});
      }
  };
  left_rule("identity (1): tau_M(am) = D_A(a)m + a tau_M(m)", *sys.A, p.dA, *sys.M, p.tauM);
  right_rule("identity (2): tau_M(mb) = m D_B(b) + tau_M(m)b", *sys.M, p.tauM, *sys.B, p.dB);
  left_rule("identity (3): tau_P(ap) = D_A(a)p + a tau_P(p)", *sys.A, p.dA, *sys.P, p.tauP);
  right_rule("identity (4): tau_P(pc) = p D_C(c) + tau_P(p)c", *sys.P, p.tauP, *sys.C, p.dC);
  left_rule("identity (5): tau_N(bn) = D_B(b)n + b tau_N(n)", *sys.B, p.dB, *sys.N, p.tauN);
  right_rule("identity (6): tau_N(nc) = n D_C(c) + tau_N(n)c", *sys.N, p.tauN, *sys.C, p.dC);
  return report;
}

ValidationReport check_mu_compatibility(const TriAlgebra& t, const LinearMap& tauM, const LinearMap& tauP,
                                        const LinearMap& tauN) {
  const TriSystem& sys = t.system;
  require_square(tauM, sys.M->dim, "tau_M");
  require_square(tauP, sys.P->dim, "tau_P");
  require_square(tauN, sys.N->dim, "tau_N");
  ValidationReport report;
  for (std::size_t i = 0; i < sys.M->dim; ++i)
    for (std::size_t j = 0; j < sys.N->dim; ++j) {
      const Vector m = unit_vector(sys.M->dim, i), n = unit_vector(sys.N->dim, j);
      const Vector lhs = tauP(pair(*sys.mu, m, n));
      const Vector rhs = pair(*sys.mu, tauM(m), n) + pair(*sys.mu, m, tauN(n));
      if (lhs != rhs) report.add("mu-compatibility: tau_P(mu(m,n)) = mu(tau_M m, n) + mu(m, tau_N n)", {i, j});
    }
  return report;
}

LinearMap block_diagonal_map(const TriAlgebra& t, const DiagonalParts& p) {
  require_dims(t, p);
  LinearMap out = LinearMap::zero(t.dim());
  auto place = [&](Block b, const LinearMap& f) {
    const std::size_t o = t.offset(b);
    for (std::size_t r = 0; r < f.dim(); ++r)
      for (std::size_t c = 0; c < f.dim(); ++c) out.matrix(o + r, o + c) = f.matrix(r, c);
  };
  place(Block::A, p.dA);
  place(Block::M, p.tauM);
  place(Block::P, p.tauP);
  place(Block::B, p.dB);
  place(Block::N, p.tauN);
  place(Block::C, p.dC);
  return out;
}

LinearMap assemble_diagonal(const TriAlgebra& t, const DiagonalParts& p) {
  require_dims(t, p);
  const TriSystem& sys = t.system;
  if (!is_derivation(*sys.A, p.dA)) throw PreconditionError("assemble_diagonal: D_A is not a derivation of A");
  if (!is_derivation(*sys.B, p.dB)) throw PreconditionError("assemble_diagonal: D_B is not a derivation of B");
  if (!is_derivation(*sys.C, p.dC)) throw PreconditionError("assemble_diagonal: D_C is not a derivation of C");
  if (const auto report = check_corner_identities(t, p); !report.ok())
    throw PreconditionError("assemble_diagonal: " + report.to_string(1));
  if (const auto report = check_mu_compatibility(t, p.tauM, p.tauP, p.tauN); !report.ok())
    throw PreconditionError("assemble_diagonal: " + report.to_string(1));

  LinearMap d = block_diagonal_map(t, p);
  if (auto bad = leibniz_failure(t.algebra, d))
    throw InvariantViolation("assembled block-diagonal map fails Leibniz at (" + std::to_string(bad->first) + "," +
                             std::to_string(bad->second) + ")");
  return d;
}

}  // namespace tri3

#include "tri3/hom.hpp"

#include <map>

#include "tri3/errors.hpp"

namespace tri3 {

namespace {

void require_map(const LinearMap& f, std::size_t n, const char* what) {
  if (f.dim() != n || f.matrix.cols() != n)
    throw DimensionMismatch(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " map");
}

void flush(RowEchelon& system, std::map<std::size_t, Rational>& acc) {
  SparseVector row;
  for (auto& [j, x] : acc)
    if (!x.is_zero()) row.emplace_back(j, std::move(x));
  acc.clear();
  if (!row.empty()) system.add(row);
}

/// Adds phi(a m) = a phi(m) and phi(m b) = phi(m) b for the map whose
/// column-stacked unknowns start at `offset`.
void add_hom_constraints(RowEchelon& system, const Bimodule& mod, std::size_t offset) {
  const std::size_t d = mod.dim;
  const Tensor3& la = mod.left_action;
  const Tensor3& ra = mod.right_action;
  auto var = [&](std::size_t r, std::size_t s) { return offset + s * d + r; };
  std::map<std::size_t, Rational> acc;

  for (std::size_t i = 0; i < mod.left->dim; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l)
          if (!la(i, j, l).is_zero()) acc[var(k, l)] += la(i, j, l);
        for (std::size_t r = 0; r < d; ++r)
          if (!la(i, r, k).is_zero()) acc[var(r, j)] -= la(i, r, k);
        flush(system, acc);
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < mod.right->dim; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l)
          if (!ra(i, j, l).is_zero()) acc[var(k, l)] += ra(i, j, l);
        for (std::size_t r = 0; r < d; ++r)
          if (!ra(r, j, k).is_zero()) acc[var(r, i)] -= ra(r, j, k);
        flush(system, acc);
      }
}

void add_mu_constraints(RowEchelon& system, const TriSystem& sys) {
  const std::size_t dm = sys.M->dim, dp = sys.P->dim, dn = sys.N->dim;
  const std::size_t oM = 0, oP = dm * dm, oN = dm * dm + dp * dp;
  const Tensor3& mu = sys.mu->tensor;
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dp; ++k) {
        // theta(mu(m_i, n_j))_k
        for (std::size_t l = 0; l < dp; ++l)
          if (!mu(i, j, l).is_zero()) acc[oP + l * dp + k] += mu(i, j, l);
        // - mu(phi(m_i), n_j)_k
        for (std::size_t r = 0; r < dm; ++r)
          if (!mu(r, j, k).is_zero()) acc[oM + i * dm + r] -= mu(r, j, k);
        // - mu(m_i, psi(n_j))_k
        for (std::size_t r = 0; r < dn; ++r)
          if (!mu(i, r, k).is_zero()) acc[oN + j * dn + r] -= mu(i, r, k);
        flush(system, acc);
      }
}

std::size_t triple_ambient(const TriSystem& sys) {
  return sys.M->dim * sys.M->dim + sys.P->dim * sys.P->dim + sys.N->dim * sys.N->dim;
}

TripleSpace make_triple_space(const TriSystem& sys, Subspace space) {
  return {sys.M->dim, sys.P->dim, sys.N->dim, std::move(space)};
}

LinearMap left_multiplication(const Bimodule& mod, const Vector& x) {
  LinearMap f = LinearMap::zero(mod.dim);
  for (std::size_t j = 0; j < mod.dim; ++j) f.matrix.set_column(j, left_act(mod, x, unit_vector(mod.dim, j)));
  return f;
}

LinearMap right_multiplication(const Bimodule& mod, const Vector& y) {
  LinearMap f = LinearMap::zero(mod.dim);
  for (std::size_t j = 0; j < mod.dim; ++j) f.matrix.set_column(j, right_act(mod, unit_vector(mod.dim, j), y));
  return f;
}

Vector concat(const Vector& a, const Vector& b, const Vector& c) {
  Vector out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

/// Generator of the joint image: column s is the triple produced by the
/// s-th center basis vector, ordered Z(A), Z(B), Z(C).
struct JointGenerator {
  Subspace za, zb, zc;
  RatMatrix columns;
};

JointGenerator joint_generator(const TriSystem& sys) {
  JointGenerator g{center(*sys.A), center(*sys.B), center(*sys.C), {}};
  const Bimodule &M = *sys.M, &N = *sys.N, &P = *sys.P;
  std::vector<Vector> cols;
  for (const auto& x : g.za.basis_vectors())
    cols.push_back(concat((-Rational(1) * left_multiplication(M, x)).vectorize(),
                          (-Rational(1) * left_multiplication(P, x)).vectorize(), LinearMap::zero(N.dim).vectorize()));
  for (const auto& y : g.zb.basis_vectors())
    cols.push_back(concat(right_multiplication(M, y).vectorize(), LinearMap::zero(P.dim).vectorize(),
                          (-Rational(1) * left_multiplication(N, y)).vectorize()));
  for (const auto& z : g.zc.basis_vectors())
    cols.push_back(concat(LinearMap::zero(M.dim).vectorize(), right_multiplication(P, z).vectorize(),
                          right_multiplication(N, z).vectorize()));
  g.columns = RatMatrix::from_columns(triple_ambient(sys), cols);
  return g;
}

Vector combine(const Subspace& s, const Vector& coeffs, std::size_t first) {
  Vector out(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Rational& f = coeffs[first + i];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) out[j].add_product(f, s.basis()(i, j));
  }
  return out;
}

void require_in_hom(const TriAlgebra& t, const HomTriple& triple) {
  const TriSystem& sys = t.system;
  require_map(triple.phi, sys.M->dim, "phi");
  require_map(triple.theta, sys.P->dim, "theta");
  require_map(triple.psi, sys.N->dim, "psi");
  if (!hom_space(*sys.M).contains(triple.phi)) throw PreconditionError("phi is not in Hom_{A,B}(M)");
  if (!hom_space(*sys.P).contains(triple.theta)) throw PreconditionError("theta is not in Hom_{A,C}(P)");
  if (!hom_space(*sys.N).contains(triple.psi)) throw PreconditionError("psi is not in Hom_{B,C}(N)");
  if (const auto report = check_triple_compatibility(sys, triple); !report.ok())
    throw PreconditionError("triple violates mu-compatibility: " + report.to_string(1));
}

}  // namespace

HomTriple HomTriple::zero(const TriSystem& sys) {
  return {LinearMap::zero(sys.M->dim), LinearMap::zero(sys.P->dim), LinearMap::zero(sys.N->dim)};
}

HomTriple HomTriple::from_vector(const TriSystem& sys, const Vector& v) {
  const std::size_t dm = sys.M->dim, dp = sys.P->dim, dn = sys.N->dim;
  if (v.size() != triple_ambient(sys)) throw DimensionMismatch("HomTriple::from_vector: length mismatch");
  auto slice = [&](std::size_t from, std::size_t len) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
  };
  return {LinearMap::from_vector(dm, slice(0, dm * dm)), LinearMap::from_vector(dp, slice(dm * dm, dp * dp)),
          LinearMap::from_vector(dn, slice(dm * dm + dp * dp, dn * dn))};
}

Vector HomTriple::vectorize() const { return concat(phi.vectorize(), theta.vectorize(), psi.vectorize()); }

MapSpace hom_space(const Bimodule& mod) {
  RowEchelon system(mod.dim * mod.dim);
  add_hom_constraints(system, mod, 0);
  return {mod.dim, system.kernel()};
}

LinearMap rosenblum_operator(const Bimodule& mod, const Vector& x, const Vector& y) {
  return right_multiplication(mod, y) - left_multiplication(mod, x);
}

MapSpace zr_space(const Bimodule& mod) {
  std::vector<Vector> spanning;
  const Vector zero_left(mod.left->dim), zero_right(mod.right->dim);
  for (const auto& x : center(*mod.left).basis_vectors())
    spanning.push_back(rosenblum_operator(mod, x, zero_right).vectorize());
  for (const auto& y : center(*mod.right).basis_vectors())
    spanning.push_back(rosenblum_operator(mod, zero_left, y).vectorize());
  return {mod.dim, Subspace::span(mod.dim * mod.dim, spanning)};
}

TripleSpace hom_triple_space(const TriSystem& sys) {
  return make_triple_space(sys, direct_sum({hom_space(*sys.M).space, hom_space(*sys.P).space, hom_space(*sys.N).space}));
}

TripleSpace zr_triple_space(const TriSystem& sys) {
  return make_triple_space(sys, direct_sum({zr_space(*sys.M).space, zr_space(*sys.P).space, zr_space(*sys.N).space}));
}

TripleSpace joint_rosenblum(const TriSystem& sys) {
  return make_triple_space(sys, column_space(joint_generator(sys).columns));
}

TripleSpace mu_compatibility_space(const TriSystem& sys) {
  RowEchelon system(triple_ambient(sys));
  add_mu_constraints(system, sys);
  return make_triple_space(sys, system.kernel());
}

TripleSpace compatible_triples(const TriSystem& sys) {
  const std::size_t dm = sys.M->dim, dp = sys.P->dim;
  RowEchelon system(triple_ambient(sys));
  add_hom_constraints(system, *sys.M, 0);
  add_hom_constraints(system, *sys.P, dm * dm);
  add_hom_constraints(system, *sys.N, dm * dm + dp * dp);
  add_mu_constraints(system, sys);
  return make_triple_space(sys, system.kernel());
}

ValidationReport check_triple_compatibility(const TriSystem& sys, const HomTriple& triple) {
  require_map(triple.phi, sys.M->dim, "phi");
  require_map(triple.theta, sys.P->dim, "theta");
  require_map(triple.psi, sys.N->dim, "psi");
  ValidationReport report;
  for (std::size_t i = 0; i < sys.M->dim; ++i)
    for (std::size_t j = 0; j < sys.N->dim; ++j) {
      const Vector m = unit_vector(sys.M->dim, i), n = unit_vector(sys.N->dim, j);
      const Vector lhs = triple.theta(pair(*sys.mu, m, n));
      const Vector rhs = pair(*sys.mu, triple.phi(m), n) + pair(*sys.mu, m, triple.psi(n));
      if (lhs != rhs) report.add("mu-compatibility: theta(mu(m,n)) = mu(phi m, n) + mu(m, psi n)", {i, j});
    }
  return report;
}

LinearMap triple_map(const TriAlgebra& t, const HomTriple& triple) {
  DiagonalParts parts = DiagonalParts::zero(t);
  parts.tauM = triple.phi;
  parts.tauP = triple.theta;
  parts.tauN = triple.psi;
  return block_diagonal_map(t, parts);
}

LinearMap build_triple_derivation(const TriAlgebra& t, const HomTriple& triple) {
  require_in_hom(t, triple);
  LinearMap d = triple_map(t, triple);
  if (auto bad = leibniz_failure(t.algebra, d))
    throw InvariantViolation("compatible Hom triple produced a non-derivation (Leibniz fails at (" +
                             std::to_string(bad->first) + "," + std::to_string(bad->second) + "))");
  return d;
}

std::optional<InnerWitness> is_inner_triple(const TriAlgebra& t, const HomTriple& triple) {
  const LinearMap d = build_triple_derivation(t, triple);
  const JointGenerator g = joint_generator(t.system);
  const auto coeffs = solve(g.columns, triple.vectorize());
  if (!coeffs) return std::nullopt;

  InnerWitness w;
  w.x = combine(g.za, *coeffs, 0);
  w.y = combine(g.zb, *coeffs, g.za.dim());
  w.z = combine(g.zc, *coeffs, g.za.dim() + g.zb.dim());
  w.element = embed_block(t, Block::A, w.x) + embed_block(t, Block::B, w.y) + embed_block(t, Block::C, w.z);
  if (inner_derivation(t.algebra, w.element) != d)
    throw InvariantViolation("central witness does not reproduce the triple derivation");
  return w;
}

}  // namespace tri3

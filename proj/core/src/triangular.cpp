#include "tri3/triangular.hpp"

#include "tri3/errors.hpp"

namespace tri3 {

std::string_view block_name(Block b) {
  static constexpr std::array<std::string_view, 6> names = {"A", "M", "P", "B", "N", "C"};
  return names[static_cast<std::size_t>(b)];
}

Block parse_block(std::string_view name) {
  for (Block b : kAllBlocks)
    if (block_name(b) == name) return b;
  throw std::invalid_argument("unknown block '" + std::string(name) + "'");
}

std::size_t TriSystem::dim(Block b) const {
  switch (b) {
    case Block::A: return A->dim;
    case Block::M: return M->dim;
    case Block::P: return P->dim;
    case Block::B: return B->dim;
    case Block::N: return N->dim;
    case Block::C: return C->dim;
  }
  return 0;
}

ValidationReport validate_system(const TriSystem& sys) {
  if (!sys.A || !sys.B || !sys.C || !sys.M || !sys.N || !sys.P || !sys.mu)
    throw PreconditionError("triangular system has a missing component");
  ValidationReport report;
  auto check_refs = [&](const Bimodule& mod, const StructureAlgebra& left, const StructureAlgebra& right) {
    if (!mod.left || !mod.right || !same_algebra(*mod.left, left) || !same_algebra(*mod.right, right))
      report.add(mod.name + ": module references", {}, "acting algebras do not match the system");
  };
  check_refs(*sys.M, *sys.A, *sys.B);
  check_refs(*sys.N, *sys.B, *sys.C);
  check_refs(*sys.P, *sys.A, *sys.C);
  if (sys.mu->module_m.get() != sys.M.get() || sys.mu->module_n.get() != sys.N.get() ||
      sys.mu->module_p.get() != sys.P.get())
    report.add("mu: module references", {}, "pairing does not refer to the system's M, N, P");
  if (!report.ok()) return report;

  report.merge(validate_algebra(*sys.A), "A: ");
  report.merge(validate_algebra(*sys.B), "B: ");
  report.merge(validate_algebra(*sys.C), "C: ");
  report.merge(validate_bimodule(*sys.M), "M: ");
  report.merge(validate_bimodule(*sys.N), "N: ");
  report.merge(validate_bimodule(*sys.P), "P: ");
  report.merge(validate_pairing(*sys.mu), "mu: ");
  return report;
}

TriSystem make_system(std::shared_ptr<const StructureAlgebra> A, std::shared_ptr<const StructureAlgebra> B,
                      std::shared_ptr<const StructureAlgebra> C, std::shared_ptr<const Bimodule> M,
                      std::shared_ptr<const Bimodule> N, std::shared_ptr<const Bimodule> P,
                      std::shared_ptr<const Pairing> mu) {
  if (!mu) {
    auto zero = std::make_shared<Pairing>();
    zero->module_m = M;
    zero->module_n = N;
    zero->module_p = P;
    zero->tensor = Tensor3(M->dim, N->dim, P->dim);
    mu = std::move(zero);
  }
  TriSystem sys{std::move(A), std::move(B), std::move(C), std::move(M), std::move(N), std::move(P), std::move(mu)};
  ValidationReport report = validate_system(sys);
  if (!report.ok()) throw ValidationError("triangular system fails validation:\n" + report.to_string(), report);
  return sys;
}

Block TriAlgebra::block_of(std::size_t i) const {
  for (Block b : kAllBlocks)
    if (i >= offset(b) && i < offset(b) + block_dim(b)) return b;
  throw std::out_of_range("basis index outside T");
}

TriAlgebra build_triangular(const TriSystem& sys) {
  TriAlgebra t;
  t.system = sys;
  std::size_t off = 0;
  for (Block b : kAllBlocks) {
    t.offsets[static_cast<std::size_t>(b)] = off;
    t.dims[static_cast<std::size_t>(b)] = sys.dim(b);
    off += sys.dim(b);
  }
  const std::size_t d = off;
  t.algebra.name = "T";
  t.algebra.dim = d;
  t.algebra.mult = Tensor3(d, d, d);
  Tensor3& c = t.algebra.mult;

  // Copies src(i,j,k) into T's tensor with the three indices shifted into
  // the given blocks.
  auto place = [&](const Tensor3& src, Block left, Block right, Block out) {
    const std::size_t o0 = t.offset(left), o1 = t.offset(right), o2 = t.offset(out);
    for (std::size_t i = 0; i < src.extent(0); ++i)
      for (std::size_t j = 0; j < src.extent(1); ++j)
        for (std::size_t k = 0; k < src.extent(2); ++k) c(o0 + i, o1 + j, o2 + k) = src(i, j, k);
  };
  place(sys.A->mult, Block::A, Block::A, Block::A);
  place(sys.M->left_action, Block::A, Block::M, Block::M);
  place(sys.M->right_action, Block::M, Block::B, Block::M);
  place(sys.P->left_action, Block::A, Block::P, Block::P);
  place(sys.mu->tensor, Block::M, Block::N, Block::P);
  place(sys.P->right_action, Block::P, Block::C, Block::P);
  place(sys.B->mult, Block::B, Block::B, Block::B);
  place(sys.N->left_action, Block::B, Block::N, Block::N);
  place(sys.N->right_action, Block::N, Block::C, Block::N);
  place(sys.C->mult, Block::C, Block::C, Block::C);

  if (sys.unital())
    t.algebra.unit = embed_block(t, Block::A, *sys.A->unit) + embed_block(t, Block::B, *sys.B->unit) +
                     embed_block(t, Block::C, *sys.C->unit);
  return t;
}

Vector embed_block(const TriAlgebra& t, Block block, const Vector& v) {
  if (v.size() != t.block_dim(block))
    throw DimensionMismatch("embed_block: vector length " + std::to_string(v.size()) + " != dim " +
                            std::string(block_name(block)) + " = " + std::to_string(t.block_dim(block)));
  Vector w(t.dim());
  std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(t.offset(block)));
  return w;
}

Vector project_block(const TriAlgebra& t, Block block, const Vector& w) {
  if (w.size() != t.dim()) throw DimensionMismatch("project_block: vector length != dim T");
  const auto first = w.begin() + static_cast<std::ptrdiff_t>(t.offset(block));
  return Vector(first, first + static_cast<std::ptrdiff_t>(t.block_dim(block)));
}

std::optional<Vector> unit_of(const TriAlgebra& t) { return t.algebra.unit; }

}  // namespace tri3

#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>

#include "tri3/algebra.hpp"

namespace tri3 {

/// Blocks of the order-three triangular algebra, in basis order.
enum class Block { A = 0, M = 1, P = 2, B = 3, N = 4, C = 5 };

inline constexpr std::array<Block, 6> kAllBlocks = {Block::A, Block::M, Block::P, Block::B, Block::N, Block::C};

std::string_view block_name(Block b);
/// Throws std::invalid_argument on anything other than one of "AMPBNC".
Block parse_block(std::string_view name);

/// The tuple (A, B, C; M, N, P; mu). Construct through make_system, which
/// runs every validator.
struct TriSystem {
  std::shared_ptr<const StructureAlgebra> A, B, C;
  std::shared_ptr<const Bimodule> M, N, P;
  std::shared_ptr<const Pairing> mu;

  bool unital() const { return A->unit && B->unit && C->unit; }
  std::size_t dim(Block b) const;
};

/// Runs all component validators plus reference checks and collects the
/// violations, prefixed with the component name. Throws on shape errors.
ValidationReport validate_system(const TriSystem& sys);

/// Validated construction. Throws ValidationError with the full report when
/// any axiom fails. A null `mu` means the zero pairing.
TriSystem make_system(std::shared_ptr<const StructureAlgebra> A, std::shared_ptr<const StructureAlgebra> B,
                      std::shared_ptr<const StructureAlgebra> C, std::shared_ptr<const Bimodule> M,
                      std::shared_ptr<const Bimodule> N, std::shared_ptr<const Bimodule> P,
                      std::shared_ptr<const Pairing> mu = nullptr);

/// T = [A M P; B N; C] materialized as a StructureAlgebra with basis order
/// (A, M, P, B, N, C).
struct TriAlgebra {
  TriSystem system;
  StructureAlgebra algebra;
  std::array<std::size_t, 6> offsets{};
  std::array<std::size_t, 6> dims{};

  std::size_t dim() const { return algebra.dim; }
  std::size_t offset(Block b) const { return offsets[static_cast<std::size_t>(b)]; }
  std::size_t block_dim(Block b) const { return dims[static_cast<std::size_t>(b)]; }
  /// Block containing basis index i of T.
  Block block_of(std::size_t i) const;
};

TriAlgebra build_triangular(const TriSystem& sys);

Vector embed_block(const TriAlgebra& t, Block block, const Vector& v);
Vector project_block(const TriAlgebra& t, Block block, const Vector& w);

/// diag(e_A, e_B, e_C) when all three corners are unital.
std::optional<Vector> unit_of(const TriAlgebra& t);

}  // namespace tri3

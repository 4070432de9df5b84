#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tri3/triangular.hpp"

namespace tri3 {

/// Optional size knobs for generate_instance. Unset fields are drawn from
/// the seed.
struct GenParams {
  std::optional<std::size_t> k;                 // matrix-corner: A = M_k
  std::optional<std::size_t> dm, dp, dn;        // scalar-towers: module dims
  std::optional<std::string> a_kind, b_kind, c_kind;  // upper-tri-blocks: "Q", "Q2", "M2"
  std::optional<bool> zero_pairing;
};

/// Preset names understood by generate_instance.
const std::vector<std::string>& catalog_presets();

/// Deterministic for a fixed (seed, preset, params); the result always
/// passes every validator. Throws std::invalid_argument on an unknown preset
/// or out-of-range parameter.
///
///   scalar-towers     A = B = C = Q, M, P, N = Q^d, mu zero or rank one
///   matrix-corner     A = M_k(Q), B = C = Q, M = P = Q^k, N = Q, mu = scalar action
///   upper-tri-blocks  A, B, C in {Q, Q^2, M_2(Q)}, rectangular matrix modules,
///                     mu = (scaled) matrix multiplication
TriSystem generate_instance(std::uint64_t seed, const std::string& preset, const GenParams& params = {});

/// Small deterministic PRNG (splitmix64) so generated instances do not depend
/// on standard-library distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

}  // namespace tri3

#include "tri3/catalog.hpp"

#include <stdexcept>

#include "tri3/constructions.hpp"

namespace tri3 {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

namespace {

// Small nonzero rationals for pairing scales and rank-one factors.
Rational small_nonzero(SplitMix64& rng) {
  static const long nums[] = {1, 2, 3, -1, -2, 1, 3};
  static const long dens[] = {1, 1, 2, 1, 3, 2, 1};
  const auto i = static_cast<std::size_t>(rng.uniform(0, 6));
  return Rational(nums[i], dens[i]);
}

Vector small_vector(SplitMix64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = Rational(rng.uniform(-2, 2));
  if (n > 0 && is_zero(v)) v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))] = 1;
  return v;
}

std::size_t pick(SplitMix64& rng, const std::optional<std::size_t>& fixed, long lo, long hi, const char* what) {
  if (fixed) {
    if (*fixed < static_cast<std::size_t>(lo) || *fixed > static_cast<std::size_t>(hi))
      throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    return *fixed;
  }
  return static_cast<std::size_t>(rng.uniform(lo, hi));
}

bool pick_zero_pairing(SplitMix64& rng, const GenParams& params) {
  // About one instance in three gets the zero pairing.
  const bool draw = rng.uniform(0, 2) == 0;
  return params.zero_pairing.value_or(draw);
}

MatrixAlgebra corner_algebra(const std::string& kind, const std::string& name) {
  if (kind == "Q") return rationals(name);
  if (kind == "Q2") return diagonal_algebra(2, name);
  if (kind == "M2") return full_matrix_algebra(2, name);
  throw std::invalid_argument("unknown corner algebra kind '" + kind + "' (expected Q, Q2 or M2)");
}

TriSystem scalar_towers(SplitMix64& rng, const GenParams& params) {
  const std::size_t dm = pick(rng, params.dm, 1, 3, "dm");
  const std::size_t dp = pick(rng, params.dp, 1, 3, "dp");
  const std::size_t dn = pick(rng, params.dn, 1, 3, "dn");
  const bool zero = pick_zero_pairing(rng, params);

  const auto A = rationals("A"), B = rationals("B"), C = rationals("C");
  auto M = scalar_bimodule("M", dm, A.algebra, B.algebra);
  auto N = scalar_bimodule("N", dn, B.algebra, C.algebra);
  auto P = scalar_bimodule("P", dp, A.algebra, C.algebra);
  Tensor3 mu(dm, dn, dp);
  if (!zero) {
    // mu(m, n) = f(m) g(n) p0
    const Vector f = small_vector(rng, dm), g = small_vector(rng, dn), p0 = small_vector(rng, dp);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t k = 0; k < dp; ++k) mu(i, j, k) = f[i] * g[j] * p0[k];
  }
  return make_system(A.algebra, B.algebra, C.algebra, M, N, P, tensor_pairing(M, N, P, std::move(mu)));
}

TriSystem matrix_corner(SplitMix64& rng, const GenParams& params) {
  const std::size_t k = pick(rng, params.k, 1, 3, "k");
  const bool zero = pick_zero_pairing(rng, params);
  const Rational scale = zero ? Rational(0) : small_nonzero(rng);

  const auto A = full_matrix_algebra(k, "A"), B = rationals("B"), C = rationals("C");
  auto M = rectangular_bimodule("M", A, B);
  auto N = rectangular_bimodule("N", B, C);
  auto P = rectangular_bimodule("P", A, C);
  auto mu = matrix_product_pairing(M, N, P, k, 1, 1, scale);
  return make_system(A.algebra, B.algebra, C.algebra, M, N, P, mu);
}

TriSystem upper_tri_blocks(SplitMix64& rng, const GenParams& params) {
  static const char* kinds[] = {"Q", "Q2", "M2"};
  auto draw_kind = [&](const std::optional<std::string>& fixed) {
    const std::string drawn = kinds[rng.uniform(0, 2)];
    return fixed.value_or(drawn);
  };
  const std::string ka = draw_kind(params.a_kind), kb = draw_kind(params.b_kind), kc = draw_kind(params.c_kind);
  const bool zero = pick_zero_pairing(rng, params);
  const Rational scale = zero ? Rational(0) : small_nonzero(rng);

  const auto A = corner_algebra(ka, "A"), B = corner_algebra(kb, "B"), C = corner_algebra(kc, "C");
  auto M = rectangular_bimodule("M", A, B);
  auto N = rectangular_bimodule("N", B, C);
  auto P = rectangular_bimodule("P", A, C);
  auto mu = matrix_product_pairing(M, N, P, A.size, B.size, C.size, scale);
  return make_system(A.algebra, B.algebra, C.algebra, M, N, P, mu);
}

}  // namespace

const std::vector<std::string>& catalog_presets() {
  static const std::vector<std::string> presets = {"scalar-towers", "matrix-corner", "upper-tri-blocks"};
  return presets;
}

TriSystem generate_instance(std::uint64_t seed, const std::string& preset, const GenParams& params) {
  SplitMix64 rng(seed);
  if (preset == "scalar-towers") return scalar_towers(rng, params);
  if (preset == "matrix-corner") return matrix_corner(rng, params);
  if (preset == "upper-tri-blocks") return upper_tri_blocks(rng, params);
  throw std::invalid_argument("unknown preset '" + preset + "'");
}

}  // namespace tri3

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "tri3/catalog.hpp"
#include "tri3/derivation.hpp"
#include "tri3/instance.hpp"
#include "tri3/matrix.hpp"

namespace support {

inline std::string fixture(const std::string& name) { return std::string(TRI3_FIXTURE_DIR) + "/" + name; }

inline tri3::TriSystem load_fixture(const std::string& name) { return tri3::parse_instance(fixture(name)); }

struct Named {
  std::string id;
  tri3::TriSystem sys;
};

/// Seeded catalog instances cycling through every preset. Sizes are left
/// to the generator except that upper-tri-blocks is capped at one M_2 corner
/// when `small` is set, to keep brute-force oracles fast.
inline std::vector<Named> catalog_sample(std::size_t count, std::uint64_t first_seed = 1, bool small = false) {
  std::vector<Named> out;
  const auto& presets = tri3::catalog_presets();
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& preset = presets[i % presets.size()];
    const std::uint64_t seed = first_seed + i;
    tri3::GenParams params;
    if (small && preset == "upper-tri-blocks") {
      static const char* kinds[] = {"Q", "Q2"};
      params.b_kind = kinds[seed % 2];
      params.c_kind = kinds[(seed / 2) % 2];
    }
    out.push_back({preset + "#" + std::to_string(seed), tri3::generate_instance(seed, preset, params)});
  }
  return out;
}

inline std::vector<Named> fixtures_unital() {
  return {{"t3_full", load_fixture("t3_full.json")},
          {"t3_mu_zero", load_fixture("t3_mu_zero.json")},
          {"example1_d2", load_fixture("example1_d2.json")}};
}

inline tri3::Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return tri3::Rational(num(rng), den(rng));
}

inline tri3::RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_percent = 30) {
  std::uniform_int_distribution<int> pct(0, 99);
  tri3::RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) >= zero_percent) m(r, c) = small_rational(rng);
  return m;
}

inline tri3::RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto g = random_matrix(rng, n, n, 20);
    if (tri3::rref(g).rank == n) return g;
  }
}

/// Product of `steps` random integer transvections: dense for steps around
/// 3n, with an integral inverse.
inline tri3::RatMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps) {
  tri3::RatMatrix g = tri3::RatMatrix::identity(n);
  if (n < 2) return g;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(1, 2), sign(0, 1);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const tri3::Rational c(sign(rng) ? coef(rng) : -coef(rng));
    for (std::size_t r = 0; r < n; ++r) g(r, j) += c * g(r, i);
  }
  return g;
}

inline tri3::Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  tri3::Vector v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

inline std::vector<oracle::Row> to_rows(const tri3::LinearMap& f) {
  std::vector<oracle::Row> out(f.dim(), oracle::Row(f.dim()));
  for (std::size_t r = 0; r < f.dim(); ++r)
    for (std::size_t c = 0; c < f.dim(); ++c) out[r][c] = f.matrix(r, c);
  return out;
}

}  // namespace support

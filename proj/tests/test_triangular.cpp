#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tri3/constructions.hpp"
#include "tri3/errors.hpp"
#include "tri3/triangular.hpp"

using namespace tri3;

TEST_CASE("T3 from scalar data: E12 E23 = E13, and zero when mu vanishes") {
  const TriAlgebra t = build_triangular(scalar_system(1));
  CHECK(t.dim() == 6);
  const Vector m = embed_block(t, Block::M, {1}), n = embed_block(t, Block::N, {1});
  CHECK(multiply(t.algebra, m, n) == embed_block(t, Block::P, {1}));
  CHECK(is_zero(multiply(t.algebra, n, m)));

  const TriAlgebra z = build_triangular(scalar_system(0));
  CHECK(is_zero(multiply(z.algebra, embed_block(z, Block::M, {1}), embed_block(z, Block::N, {1}))));
  // everything else still multiplies like T3
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (t.block_of(i) == Block::M && t.block_of(j) == Block::N) continue;
      CHECK(multiply(t.algebra, unit_vector(6, i), unit_vector(6, j)) ==
            multiply(z.algebra, unit_vector(6, i), unit_vector(6, j)));
    }
}

TEST_CASE("T3 from scalar data is isomorphic to the upper-triangular matrices") {
  // basis order A, M, P, B, N, C = E11, E12, E13, E22, E23, E33
  const TriAlgebra t = build_triangular(scalar_system(1));
  const auto u3 = upper_triangular_algebra(3);  // E11, E12, E13, E22, E23, E33
  CHECK(same_algebra(t.algebra, *u3.algebra));
}

TEST_CASE("property: every basis product of T follows the block multiplication rule") {
  auto sample = support::catalog_sample(12, 100);
  for (auto& f : support::fixtures_unital()) sample.push_back(std::move(f));
  for (const auto& [id, sys] : sample) {
    CAPTURE(id);
    const TriAlgebra t = build_triangular(sys);
    std::size_t total = 0;
    for (Block b : kAllBlocks) total += sys.dim(b);
    CHECK(t.dim() == total);
    CHECK(validate_algebra(t.algebra).ok());
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j) {
        const Vector x = unit_vector(t.dim(), i), y = unit_vector(t.dim(), j);
        const auto expected = oracle::concat(oracle::tri_product(sys, oracle::split(sys, x), oracle::split(sys, y)));
        CHECK(multiply(t.algebra, x, y) == expected);
      }
  }
}

TEST_CASE("block grading: A times N vanishes, M times N lands in P") {
  const auto sys = generate_instance(5, "upper-tri-blocks", {.a_kind = "M2", .b_kind = "Q2", .c_kind = "Q", .zero_pairing = false});
  const TriAlgebra t = build_triangular(sys);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector a = embed_block(t, Block::A, support::random_vector(rng, t.block_dim(Block::A)));
    const Vector m = embed_block(t, Block::M, support::random_vector(rng, t.block_dim(Block::M)));
    const Vector n = embed_block(t, Block::N, support::random_vector(rng, t.block_dim(Block::N)));
    CHECK(is_zero(multiply(t.algebra, a, n)));
    const Vector mn = multiply(t.algebra, m, n);
    CHECK(embed_block(t, Block::P, project_block(t, Block::P, mn)) == mn);
  }
}

TEST_CASE("embed and project") {
  const TriAlgebra t = build_triangular(support::load_fixture("example1_d2.json"));
  std::mt19937_64 rng(4);
  Vector whole = zero_vector(t.dim());
  const Vector target = support::random_vector(rng, t.dim());
  for (Block b : kAllBlocks) {
    const Vector v = project_block(t, b, target);
    CHECK(v.size() == t.block_dim(b));
    CHECK(project_block(t, b, embed_block(t, b, v)) == v);
    whole = whole + embed_block(t, b, v);
  }
  CHECK(whole == target);
  CHECK(is_zero(project_block(t, Block::A, embed_block(t, Block::M, {1, 2}))));
  CHECK_THROWS_AS(embed_block(t, Block::M, {1}), DimensionMismatch);
  CHECK_THROWS_AS(project_block(t, Block::M, {1}), DimensionMismatch);
  CHECK_THROWS_AS(parse_block("Q"), std::invalid_argument);
  CHECK(parse_block("N") == Block::N);
  CHECK(block_name(Block::P) == "P");
}

TEST_CASE("unit of T") {
  const TriAlgebra t = build_triangular(scalar_system(1));
  REQUIRE(unit_of(t));
  CHECK(*unit_of(t) == Vector{1, 0, 0, 1, 0, 1});

  const TriAlgebra big = build_triangular(generate_instance(9, "matrix-corner", {.k = 3}));
  const auto u = unit_of(big);
  REQUIRE(u);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector w = support::random_vector(rng, big.dim());
    CHECK(multiply(big.algebra, *u, w) == w);
    CHECK(multiply(big.algebra, w, *u) == w);
  }
}

TEST_CASE("non-unital corner: T has no unit") {
  auto A = std::make_shared<StructureAlgebra>(StructureAlgebra{"A", 1, Tensor3(1, 1, 1), std::nullopt});
  const auto B = rationals("B"), C = rationals("C");
  auto M = std::make_shared<Bimodule>(Bimodule{"M", 1, A, B.algebra, Tensor3(1, 1, 1), Tensor3(1, 1, 1)});
  M->right_action(0, 0, 0) = 1;
  auto P = std::make_shared<Bimodule>(Bimodule{"P", 1, A, C.algebra, Tensor3(1, 1, 1), Tensor3(1, 1, 1)});
  P->right_action(0, 0, 0) = 1;
  const auto N = scalar_bimodule("N", 1, B.algebra, C.algebra);
  const TriSystem sys = make_system(A, B.algebra, C.algebra, M, N, P);
  CHECK_FALSE(sys.unital());
  const TriAlgebra t = build_triangular(sys);
  CHECK_FALSE(unit_of(t));
  CHECK(validate_algebra(t.algebra).ok());
}

TEST_CASE("make_system refuses invalid components and mismatched references") {
  const auto Q = rationals("Q"), Q2 = diagonal_algebra(2, "Q2");
  auto bad = std::make_shared<StructureAlgebra>(*Q.algebra);
  bad->unit = Vector{3};
  const auto M = scalar_bimodule("M", 1, Q.algebra, Q.algebra);
  CHECK_THROWS_AS(make_system(bad, Q.algebra, Q.algebra, M, M, M), ValidationError);

  const auto wrong = rectangular_bimodule("M", Q2, Q);
  try {
    make_system(Q.algebra, Q.algebra, Q.algebra, wrong, M, M);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.report().ok());
  }
}

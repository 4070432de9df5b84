#include <doctest.h>

#include "support.hpp"
#include "tri3/constructions.hpp"
#include "tri3/errors.hpp"
#include "tri3/hom.hpp"

using namespace tri3;

namespace {

HomTriple scalar_triple(const Rational& phi, const Rational& theta, const Rational& psi) {
  return {phi * LinearMap::identity(1), theta * LinearMap::identity(1), psi * LinearMap::identity(1)};
}

// A one-dimensional algebra with zero product, acting by zero on Q^d.
std::shared_ptr<const Bimodule> zero_action_module(std::size_t d) {
  auto z = std::make_shared<StructureAlgebra>(StructureAlgebra{"Z", 1, Tensor3(1, 1, 1), std::nullopt});
  return std::make_shared<Bimodule>(Bimodule{"M", d, z, z, Tensor3(1, d, d), Tensor3(d, 1, d)});
}

TriSystem zero_action_system() {
  auto z = std::make_shared<StructureAlgebra>(StructureAlgebra{"Z", 1, Tensor3(1, 1, 1), std::nullopt});
  auto mod = [&](const char* name) {
    return std::make_shared<Bimodule>(Bimodule{name, 1, z, z, Tensor3(1, 1, 1), Tensor3(1, 1, 1)});
  };
  return make_system(z, z, z, mod("M"), mod("N"), mod("P"));
}

std::shared_ptr<const Bimodule> column_module() {
  return rectangular_bimodule("M", full_matrix_algebra(2, "A"), rationals("B"));
}

}  // namespace

TEST_CASE("Hom spaces of the fixed examples") {
  const auto Q = rationals();
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto mod = scalar_bimodule("M", d, Q.algebra, Q.algebra);
    CHECK(hom_space(*mod).dim() == d * d);
    CHECK(hom_space(*mod).space == Subspace::full(d * d));
  }
  const auto col = column_module();
  const MapSpace h = hom_space(*col);
  CHECK(h.dim() == 1);
  CHECK(h.contains(LinearMap::identity(2)));
  CHECK(h.dim() == oracle::hom_dim(*col));
  CHECK(hom_space(*zero_action_module(2)).dim() == 4);
}

TEST_CASE("central Rosenblum spaces of the fixed examples") {
  const auto Q = rationals();
  const MapSpace zr = zr_space(*scalar_bimodule("M", 3, Q.algebra, Q.algebra));
  CHECK(zr.dim() == 1);
  CHECK(zr.contains(LinearMap::identity(3)));
  const MapSpace zc = zr_space(*column_module());
  CHECK(zc.dim() == 1);
  CHECK(zc.contains(LinearMap::identity(2)));
  CHECK(zr_space(*zero_action_module(2)).dim() == 0);

  // m -> m y - x m with x = 2, y = 5 on scalars is 3 id
  const auto mod = scalar_bimodule("M", 2, Q.algebra, Q.algebra);
  CHECK(rosenblum_operator(*mod, {2}, {5}) == Rational(3) * LinearMap::identity(2));
}

TEST_CASE("joint Rosenblum image and compatible triples on the fixed systems") {
  const TriSystem t3 = scalar_system(1), t3z = scalar_system(0), ex1 = support::load_fixture("example1_d2.json");
  CHECK(joint_rosenblum(t3).dim() == 2);
  CHECK(joint_rosenblum(t3z).dim() == 2);
  CHECK(joint_rosenblum(ex1).dim() == 2);
  CHECK(joint_rosenblum(zero_action_system()).dim() == 0);

  CHECK(compatible_triples(t3).dim() == 2);
  CHECK(compatible_triples(t3z).dim() == 3);
  CHECK(compatible_triples(ex1).dim() == 12);
  CHECK(compatible_triples(t3z).space == hom_triple_space(t3z).space);

  // the single constraint on T3: theta = phi + psi
  CHECK(compatible_triples(t3).contains(scalar_triple(1, 1, 0)));
  CHECK(compatible_triples(t3).contains(scalar_triple(2, 5, 3)));
  CHECK_FALSE(compatible_triples(t3).contains(scalar_triple(1, 1, 1)));
}

TEST_CASE("compatible triples equal Hom triples cut by the compatibility constraints") {
  for (const auto& [id, sys] : support::catalog_sample(9, 400, true)) {
    CAPTURE(id);
    CHECK(compatible_triples(sys).space == intersect(hom_triple_space(sys).space, mu_compatibility_space(sys).space));
  }
}

TEST_CASE("triple derivations: zero, a compatible triple, an incompatible one") {
  const TriAlgebra t = build_triangular(scalar_system(1));
  CHECK(build_triple_derivation(t, HomTriple::zero(t.system)) == LinearMap::zero(6));
  const LinearMap d = build_triple_derivation(t, scalar_triple(1, 1, 0));
  CHECK(oracle::is_derivation(t.algebra, support::to_rows(d)));

  CHECK_THROWS_AS(build_triple_derivation(t, scalar_triple(1, 1, 1)), PreconditionError);
  CHECK_FALSE(check_triple_compatibility(t.system, scalar_triple(1, 1, 1)).ok());
  CHECK_FALSE(oracle::is_derivation(t.algebra, support::to_rows(triple_map(t, scalar_triple(1, 1, 1)))));

  // phi outside Hom(M) for M = 2x1 columns over M_2
  const auto sys = generate_instance(1, "matrix-corner", {.k = 2, .zero_pairing = true});
  const TriAlgebra mc = build_triangular(sys);
  HomTriple bad = HomTriple::zero(sys);
  bad.phi.matrix(0, 1) = 1;
  CHECK_THROWS_AS(build_triple_derivation(mc, bad), PreconditionError);
}

TEST_CASE("inner-triple witnesses") {
  const TriAlgebra t = build_triangular(scalar_system(1));
  const auto zero = is_inner_triple(t, HomTriple::zero(t.system));
  REQUIRE(zero);
  CHECK(is_zero(zero->element));

  const HomTriple tr = scalar_triple(1, 1, 0);
  const auto w = is_inner_triple(t, tr);
  REQUIRE(w);
  // y - x = 1, z - x = 1, z - y = 0
  CHECK(w->y[0] - w->x[0] == Rational(1));
  CHECK(w->z[0] - w->x[0] == Rational(1));
  CHECK(w->z[0] == w->y[0]);
  CHECK(inner_derivation(t.algebra, w->element) == build_triple_derivation(t, tr));

  const TriAlgebra tz = build_triangular(scalar_system(0));
  CHECK_FALSE(is_inner_triple(tz, scalar_triple(1, 0, 0)));
}

TEST_CASE("property: Rosenblum inclusions on catalog instances") {
  for (const auto& [id, sys] : support::catalog_sample(12, 500)) {
    CAPTURE(id);
    for (const auto* mod : {sys.M.get(), sys.P.get(), sys.N.get()}) {
      const MapSpace h = hom_space(*mod);
      CHECK(is_subset(zr_space(*mod).space, h.space));
      if (mod->dim <= 4) CHECK(h.dim() == oracle::hom_dim(*mod));
    }
    const TripleSpace joint = joint_rosenblum(sys);
    CHECK(is_subset(joint.space, compatible_triples(sys).space));
    CHECK(is_subset(joint.space, zr_triple_space(sys).space));
  }
}

TEST_CASE("property: compatible triples give derivations and incompatible Hom triples do not") {
  for (const auto& [id, sys] : support::catalog_sample(9, 600, true)) {
    CAPTURE(id);
    const TriAlgebra t = build_triangular(sys);
    const TripleSpace comp = compatible_triples(sys), homs = hom_triple_space(sys);
    for (const auto& v : comp.space.basis_vectors()) {
      const LinearMap d = build_triple_derivation(t, HomTriple::from_vector(sys, v));
      CHECK(oracle::is_derivation(t.algebra, support::to_rows(d)));
    }
    for (const auto& v : homs.space.basis_vectors()) {
      if (comp.space.contains(v)) continue;
      CHECK_FALSE(oracle::is_derivation(t.algebra, support::to_rows(triple_map(t, HomTriple::from_vector(sys, v)))));
    }
  }
}

TEST_CASE("property: inner-triple witnesses agree with membership in Inn(T)") {
  auto sample = support::catalog_sample(9, 700, true);
  for (auto& f : support::fixtures_unital()) sample.push_back(std::move(f));
  for (const auto& [id, sys] : sample) {
    CAPTURE(id);
    const TriAlgebra t = build_triangular(sys);
    const MapSpace inn = inner_derivation_space(t.algebra);
    const TripleSpace comp = compatible_triples(sys);
    for (const auto& v : comp.space.basis_vectors()) {
      const HomTriple tr = HomTriple::from_vector(sys, v);
      const auto w = is_inner_triple(t, tr);
      CHECK(w.has_value() == inn.contains(build_triple_derivation(t, tr)));
      CHECK(w.has_value() == joint_rosenblum(sys).contains(tr));
    }
  }
}

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. argv[1] is the path of the tri3 executable.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tri3/catalog.hpp"
#include "tri3/constructions.hpp"
#include "tri3/derivation.hpp"
#include "tri3/errors.hpp"
#include "tri3/hom.hpp"
#include "tri3/instance.hpp"
#include "tri3/report.hpp"

using namespace tri3;
using oracle::Row;

namespace {

// All comparisons are exact over Q; these pin the sample sizes.
constexpr std::size_t kCatalogInstances = 64;
constexpr std::uint64_t kCatalogSeed = 20260101;
constexpr std::size_t kMinAssemblies = 100;
constexpr std::size_t kAssembliesPerInstance = 2;
constexpr std::size_t kMinPreconditionInstances = 50;
constexpr std::size_t kBasisChanges = 10;
constexpr std::size_t kMaxBasisChangeDim = 10;
constexpr std::size_t kMaxBasisChangeInstances = 8;
constexpr int kCliRepeats = 3;

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  void merge(const Tally& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

struct Outcome {
  Tally c1, c2, c3, c4, c5, c6, c7;
  std::size_t perturbations_detected = 0;
  std::size_t assemblies = 0;
  std::size_t incompatible_rejected = 0;
  std::size_t inner_triples = 0, outer_triples = 0;
  bool precondition = false;
};

// phi(a m) = a phi(m) and phi(m b) = phi(m) b on all basis elements.
bool oracle_is_hom(const Bimodule& mod, const std::vector<Row>& f) {
  const std::size_t d = mod.dim, la = mod.left->dim, rb = mod.right->dim;
  for (std::size_t j = 0; j < d; ++j) {
    const Row m = oracle::basis(d, j);
    for (std::size_t i = 0; i < la; ++i) {
      const Row a = oracle::basis(la, i);
      if (oracle::apply_map(f, oracle::mul(mod.left_action, la, d, d, a, m)) !=
          oracle::mul(mod.left_action, la, d, d, a, oracle::apply_map(f, m)))
        return false;
    }
    for (std::size_t i = 0; i < rb; ++i) {
      const Row b = oracle::basis(rb, i);
      if (oracle::apply_map(f, oracle::mul(mod.right_action, d, rb, d, m, b)) !=
          oracle::mul(mod.right_action, d, rb, d, oracle::apply_map(f, m), b))
        return false;
    }
  }
  return true;
}

std::string tag(const std::string& id, const std::string& what) { return id + ": " + what; }

void check_corners(const std::string& id, const TriAlgebra& t, const MapSpace& der, Outcome& out) {
  const TriSystem& sys = t.system;
  for (std::size_t i = 0; i < der.dim(); ++i) {
    const LinearMap d = der.basis_map(i);
    CornerData c;
    try {
      c = extract_corners(t, d);
    } catch (const CornerStructureError& e) {
      out.c2.expect(false, tag(id, e.what()));
      continue;
    }
    out.c2.expect(reconstruct(t, c) == d, tag(id, "round trip differs for basis derivation " + std::to_string(i)));
    out.c3.expect(check_corner_identities(t, c).ok(), tag(id, "identities fail on basis derivation " + std::to_string(i)));
  }

  // Negative control on the corners of the first basis derivation (or zero).
  const CornerData base = der.dim() ? extract_corners(t, der.basis_map(0)) : CornerData::zero(t);
  struct Slot {
    LinearMap DiagonalParts::*tau;
    const Bimodule* mod;
    const char* name;
  };
  for (const Slot& s : {Slot{&DiagonalParts::tauM, sys.M.get(), "tau_M"}, Slot{&DiagonalParts::tauP, sys.P.get(), "tau_P"},
                        Slot{&DiagonalParts::tauN, sys.N.get(), "tau_N"}}) {
    const std::size_t n = s.mod->dim;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        DiagonalParts parts = base.parts;
        (parts.*s.tau).matrix(r, col) += 1;
        // The shift E_rc is invisible to the identities exactly when it is a
        // bimodule homomorphism.
        std::vector<Row> e(n, Row(n));
        e[r][col] = 1;
        const bool should_detect = !oracle_is_hom(*s.mod, e);
        const bool detected = !check_corner_identities(t, parts).ok();
        out.c3.expect(detected == should_detect, tag(id, std::string(s.name) + " perturbation (" + std::to_string(r) + "," +
                                                            std::to_string(col) + ") judged wrongly"));
        out.perturbations_detected += detected;
      }
  }
}

void check_assembly(const std::string& id, const TriAlgebra& t, const MapSpace& der, std::uint64_t seed, Outcome& out) {
  const TriSystem& sys = t.system;
  const TripleSpace comp = compatible_triples(sys);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < kAssembliesPerInstance; ++k) {
    DiagonalParts parts = DiagonalParts::zero(t);
    if (der.dim()) {
      std::uniform_int_distribution<std::size_t> pick(0, der.dim() - 1);
      parts = extract_corners(t, der.basis_map(pick(rng))).parts;
    }
    if (comp.dim()) {
      Vector v = zero_vector(comp.space.ambient_dim());
      for (const auto& b : comp.space.basis_vectors()) v = v + support::small_rational(rng) * b;
      const HomTriple tr = HomTriple::from_vector(sys, v);
      parts.tauM = parts.tauM + tr.phi;
      parts.tauP = parts.tauP + tr.theta;
      parts.tauN = parts.tauN + tr.psi;
    }
    try {
      const LinearMap d = assemble_diagonal(t, parts);
      out.c4.expect(oracle::is_derivation(t.algebra, support::to_rows(d)), tag(id, "assembled map is not a derivation"));
      ++out.assemblies;
    } catch (const std::exception& e) {
      out.c4.expect(false, tag(id, std::string("assembly refused: ") + e.what()));
    }
  }
  if (sys.mu->tensor.is_zero()) return;
  for (const auto& v : hom_triple_space(sys).space.basis_vectors()) {
    const HomTriple tr = HomTriple::from_vector(sys, v);
    if (comp.contains(tr)) continue;
    out.c4.expect(!check_triple_compatibility(sys, tr).ok(), tag(id, "incompatible triple passes the compatibility check"));
    const bool derivation = oracle::is_derivation(t.algebra, support::to_rows(triple_map(t, tr)));
    out.c4.expect(!derivation, tag(id, "incompatible triple yields a derivation"));
    out.incompatible_rejected += !derivation;
  }
}

Outcome analyse(const support::Named& inst, std::uint64_t seed) {
  Outcome out;
  const auto& [id, sys] = inst;
  const TriAlgebra t = build_triangular(sys);
  const MapSpace der = derivation_space(t.algebra);
  const MapSpace inn = inner_derivation_space(t.algebra);
  const std::size_t oracle_der = oracle::der_dim(t.algebra), oracle_inn = oracle::inn_dim(t.algebra);

  if (sys.unital()) {
    out.c1.expect(inn.dim() == t.dim() - oracle::center_dim(t.algebra), tag(id, "dim Inn != dim T - dim Z(T)"));
    out.c1.expect(inn.dim() == oracle_inn, tag(id, "dim Inn differs from the ad-image oracle"));
    out.c1.expect(der.dim() == oracle_der, tag(id, "dim Der differs from the Leibniz oracle"));
    check_corners(id, t, der, out);
    check_assembly(id, t, der, seed, out);
  }

  for (const auto* mod : {sys.M.get(), sys.P.get(), sys.N.get()}) {
    const MapSpace zr = zr_space(*mod);
    out.c5.expect(is_subset(zr.space, hom_space(*mod).space), tag(id, mod->name + ": ZR not inside Hom"));
    for (std::size_t i = 0; i < zr.dim(); ++i)
      out.c5.expect(oracle_is_hom(*mod, support::to_rows(zr.basis_map(i))), tag(id, mod->name + ": ZR element fails oracle Hom test"));
  }

  if (sys.unital()) {
    const TripleSpace joint = joint_rosenblum(sys);
    for (const auto& v : compatible_triples(sys).space.basis_vectors()) {
      const HomTriple tr = HomTriple::from_vector(sys, v);
      const auto w = is_inner_triple(t, tr);
      const LinearMap d = build_triple_derivation(t, tr);
      out.c6.expect(w.has_value() == inn.contains(d), tag(id, "inner-triple witness disagrees with Inn(T) membership"));
      out.c6.expect(w.has_value() == joint.contains(tr), tag(id, "inner-triple witness disagrees with the joint image"));
      if (w) out.c6.expect(inner_derivation(t.algebra, w->element) == d, tag(id, "witness does not reproduce the triple map"));
      (w ? out.inner_triples : out.outer_triples) += 1;
    }
  }

  const CohomologyReport r = verify_theorems(sys, id);
  out.precondition = r.precondition_holds;
  if (r.precondition_holds) {
    const long brute = static_cast<long>(oracle_der) - static_cast<long>(oracle_inn);
    out.c7.expect(r.quotient_corrected == brute, tag(id, "corrected quotient " + std::to_string(r.quotient_corrected) +
                                                             " != oracle H1 " + std::to_string(brute)));
    out.c7.expect(r.h1_T_bruteforce == h1_dim(t.algebra), tag(id, "report H1 differs from the engine"));
  }
  return out;
}

struct Line {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

Line summarize(int number, const std::string& title, const Tally& t, bool extra_ok, const std::string& detail) {
  std::ostringstream os;
  os << detail << "; " << t.checked << " checks";
  if (!t.failures.empty()) os << ", " << t.failures.size() << " failed, first: " << t.failures.front();
  return {number, title, t.failures.empty() && extra_ok && t.checked > 0, os.str()};
}

// ---------------------------------------------------------------------------
// CLI helpers

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Line cli_contract(const char* cli) {
  Tally t;
  if (!cli) {
    t.expect(false, "no CLI path given");
    return summarize(10, "CLI contract", t, true, "");
  }
  const std::string exe = quote(cli);
  auto fx = [](const char* name) { return quote(support::fixture(name)); };

  for (const std::string& args : std::vector<std::string>{"verify " + fx("t3_full.json") + " --json",
                                 "verify " + fx("t3_full.json") + " " + fx("t3_mu_zero.json") + " " +
                                     fx("example1_d2.json") + " --json",
                                 "gen --preset upper-tri-blocks --seed 11"}) {
    const RunResult first = run(exe + " " + args);
    t.expect(first.exit_code == 0, "exit " + std::to_string(first.exit_code) + " for " + args);
    t.expect(!first.out.empty(), "no output for " + args);
    for (int i = 1; i < kCliRepeats; ++i) t.expect(run(exe + " " + args).out == first.out, "output not byte-identical for " + args);
  }

  struct Expect {
    std::string args;
    int code;
  };
  const Expect cases[] = {
      {"validate " + fx("t3_full.json"), 0},
      {"validate " + fx("bad.json"), 1},
      {"verify " + fx("bad.json"), 1},
      {"validate " + fx("malformed.json"), 3},
      {"verify " + fx("malformed.json"), 3},
      {"verify " + fx("does_not_exist.json"), 3},
      {"verify --strict " + fx("dual_numbers.json"), 2},
      {"verify " + fx("dual_numbers.json"), 0},
  };
  for (const auto& [args, code] : cases) {
    const int got = run(exe + " " + args).exit_code;
    t.expect(got == code, "exit " + std::to_string(got) + " (expected " + std::to_string(code) + ") for " + args);
  }
  return summarize(10, "CLI contract", t, true, "byte-stable JSON and exit codes 0/1/2/3");
}

// ---------------------------------------------------------------------------

Line basis_change_invariance(const std::vector<support::Named>& instances) {
  Tally t;
  std::size_t used = 0;
  std::vector<std::future<Tally>> jobs;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& inst = instances[idx];
    const TriAlgebra tri = build_triangular(inst.sys);
    if (tri.dim() > kMaxBasisChangeDim || used == kMaxBasisChangeInstances) continue;
    ++used;
    jobs.push_back(std::async(std::launch::async, [&inst, idx] {
      Tally local;
      const StructureAlgebra alg = build_triangular(inst.sys).algebra;
      const std::size_t der = derivation_space(alg).dim(), inn = inner_derivation_space(alg).dim();
      // Integer unimodular bases keep exact elimination on the dense
      // transported tensor affordable.
      std::mt19937_64 rng(7000 + idx);
      for (std::size_t k = 0; k < kBasisChanges; ++k) {
        const StructureAlgebra moved = change_basis(alg, support::random_unimodular(rng, alg.dim, 3 * alg.dim));
        const MapSpace d2 = derivation_space(moved), i2 = inner_derivation_space(moved);
        local.expect(d2.dim() == der && i2.dim() == inn && is_subset(i2.space, d2.space) &&
                         quotient_dim(i2.space, d2.space) == der - inn,
                     tag(inst.id, "dims changed under basis change " + std::to_string(k)));
      }
      return local;
    }));
  }
  for (auto& j : jobs) t.merge(j.get());
  return summarize(9, "basis-change invariance", t, used >= 5,
                   std::to_string(used) + " instances x " + std::to_string(kBasisChanges) + " random bases");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<support::Named> instances = support::fixtures_unital();
  instances.push_back({"dual_numbers", support::load_fixture("dual_numbers.json")});
  GenParams k2;
  k2.k = 2;
  instances.push_back({"matrix-corner-k2", generate_instance(2, "matrix-corner", k2)});
  for (auto& s : support::catalog_sample(kCatalogInstances, kCatalogSeed)) instances.push_back(std::move(s));

  std::vector<std::future<Outcome>> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] { return analyse(instances[i], kCatalogSeed + i); }));

  Outcome total;
  std::size_t precondition_instances = 0;
  for (auto& j : jobs) {
    const Outcome o = j.get();
    total.c1.merge(o.c1);
    total.c2.merge(o.c2);
    total.c3.merge(o.c3);
    total.c4.merge(o.c4);
    total.c5.merge(o.c5);
    total.c6.merge(o.c6);
    total.c7.merge(o.c7);
    total.perturbations_detected += o.perturbations_detected;
    total.assemblies += o.assemblies;
    total.incompatible_rejected += o.incompatible_rejected;
    total.inner_triples += o.inner_triples;
    total.outer_triples += o.outer_triples;
    precondition_instances += o.precondition;
  }

  std::vector<Line> lines;

  // 1: named dimensions, then the per-instance checks gathered above.
  {
    Tally named;
    const StructureAlgebra m2 = *full_matrix_algebra(2).algebra;
    const StructureAlgebra t3 = *upper_triangular_algebra(3).algebra;
    for (const auto& [name, alg, expect] : {std::tuple{"M2", &m2, std::size_t{3}}, std::tuple{"T3", &t3, std::size_t{5}}}) {
      named.expect(derivation_space(*alg).dim() == expect && oracle::der_dim(*alg) == expect, std::string(name) + ": dim Der");
      named.expect(inner_derivation_space(*alg).dim() == expect && oracle::inn_dim(*alg) == expect, std::string(name) + ": dim Inn");
      named.expect(h1_dim(*alg) == 0 && oracle::h1(*alg) == 0, std::string(name) + ": H1");
    }
    named.merge(total.c1);
    lines.push_back(summarize(1, "generic-engine sanity", named, true, "M2 3/3, T3 5/5, dim Inn = dim - dim Z on catalog"));
  }
  lines.push_back(summarize(2, "block structure and reconstruction", total.c2, true, "every basis derivation of every unital instance"));
  lines.push_back(summarize(3, "corner identities and perturbation control", total.c3, total.perturbations_detected > 0,
                            std::to_string(total.perturbations_detected) + " perturbations detected"));
  lines.push_back(summarize(4, "block-diagonal assembly", total.c4,
                            total.assemblies >= kMinAssemblies && total.incompatible_rejected > 0,
                            std::to_string(total.assemblies) + " assemblies, " + std::to_string(total.incompatible_rejected) +
                                " incompatible triples rejected"));
  lines.push_back(summarize(5, "ZR inside Hom", total.c5, true, "M, P, N of every instance"));
  lines.push_back(summarize(6, "inner-triple criterion", total.c6, true,
                            std::to_string(total.inner_triples) + " inner, " + std::to_string(total.outer_triples) + " outer"));

  // 7: named instances with their exact values, then the seeded sweep.
  {
    Tally named;
    struct Ref {
      const char* id;
      std::size_t num, den;
    };
    for (const Ref& ref : {Ref{"t3_full", 2, 2}, Ref{"t3_mu_zero", 3, 2}, Ref{"example1_d2", 12, 2}}) {
      const CohomologyReport r = verify_theorems(support::load_fixture(std::string(ref.id) + ".json"), ref.id);
      named.expect(r.numerator_compatible == ref.num && r.denominator_joint == ref.den,
                   std::string(ref.id) + ": numerator/denominator " + std::to_string(r.numerator_compatible) + "/" +
                       std::to_string(r.denominator_joint));
    }
    const CohomologyReport mc = verify_theorems(instances[4].sys, "matrix-corner-k2");
    named.expect(mc.precondition_holds, "matrix-corner-k2: precondition");
    named.merge(total.c7);
    lines.push_back(summarize(7, "H1 quotient, joint reading", named, precondition_instances >= kMinPreconditionInstances,
                              std::to_string(precondition_instances) + " instances with vanishing corner H1"));
  }

  // 8: the direct-sum reading.
  {
    Tally t;
    const CohomologyReport zero = verify_theorems(support::load_fixture("t3_mu_zero.json"), "t3_mu_zero");
    const CohomologyReport full = verify_theorems(support::load_fixture("t3_full.json"), "t3_full");
    t.expect(zero.quotient_naive == 0 && zero.numerator_naive == 3 && zero.denominator_naive == 3, "t3_mu_zero: naive 3 - 3");
    t.expect(zero.h1_T_bruteforce == 1 && oracle::h1(build_triangular(scalar_system(0)).algebra) == 1, "t3_mu_zero: H1 = 1");
    t.expect(!zero.naive_reading_agrees && zero.verdict(checks::kQuotientDirectSum)->status == Status::Fail,
             "t3_mu_zero: discrepancy not flagged");
    t.expect(full.quotient_naive == 0 && full.quotient_corrected == 0 && full.h1_T_bruteforce == 0 && full.naive_reading_agrees,
             "t3_full: readings disagree");
    lines.push_back(summarize(8, "direct-sum reading discrepancy", t, true, "t3_mu_zero 0 vs 1 flagged, t3_full 0 = 0"));
  }

  lines.push_back(basis_change_invariance(instances));
  lines.push_back(cli_contract(argc > 1 ? argv[1] : nullptr));

  bool all = true;
  for (const auto& l : lines) {
    std::cout << (l.pass ? "PASS" : "FAIL") << "  criterion " << l.number << ": " << l.title << " (" << l.detail << ")\n";
    all &= l.pass;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

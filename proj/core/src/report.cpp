#include "tri3/report.hpp"

#include <sstream>

#include <json.hpp>

#include "tri3/derivation.hpp"
#include "tri3/errors.hpp"
#include "tri3/hom.hpp"

namespace tri3 {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

const Verdict* CohomologyReport::verdict(std::string_view check) const {
  for (const auto& v : verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

bool CohomologyReport::all_passed() const {
  for (const auto& v : verdicts)
    if (v.status == Status::Fail && v.check != checks::kQuotientDirectSum) return false;
  return true;
}

namespace {

class VerdictBuilder {
 public:
  explicit VerdictBuilder(std::string_view check) : check_(check) {}

  void fail(const std::string& witness) {
    if (failures_++ == 0) first_ = witness;
  }
  void not_applicable(std::string why) { na_ = std::move(why); }
  bool failed() const { return failures_ > 0; }

  Verdict finish(const std::string& pass_detail) const {
    if (!na_.empty()) return {std::string(check_), Status::NotApplicable, na_};
    if (failures_ > 0)
      return {std::string(check_), Status::Fail,
              std::to_string(failures_) + " failure(s); first: " + first_};
    return {std::string(check_), Status::Pass, pass_detail};
  }

 private:
  std::string_view check_;
  std::size_t failures_ = 0;
  std::string first_;
  std::string na_;
};

std::string count_detail(std::size_t n, const char* what) { return "checked " + std::to_string(n) + " " + what; }

}  // namespace

CohomologyReport verify_theorems(const TriSystem& sys, std::string instance_id) {
  CohomologyReport r;
  r.instance_id = std::move(instance_id);
  const TriAlgebra t = build_triangular(sys);
  for (Block b : kAllBlocks) r.dims[static_cast<std::size_t>(b)] = t.block_dim(b);
  r.dim_T = t.dim();
  r.unital = sys.unital();

  r.h1_A = h1_dim(*sys.A);
  r.h1_B = h1_dim(*sys.B);
  r.h1_C = h1_dim(*sys.C);
  r.precondition_holds = r.h1_A == 0 && r.h1_B == 0 && r.h1_C == 0;

  const MapSpace der = derivation_space(t.algebra);
  const MapSpace inn = inner_derivation_space(t.algebra);
  if (!is_subset(inn.space, der.space)) throw InvariantViolation("Inn(T) is not contained in Der(T)");
  r.dim_der_T = der.dim();
  r.dim_inn_T = inn.dim();
  r.h1_T_bruteforce = der.dim() - inn.dim();

  const MapSpace hom_m = hom_space(*sys.M), hom_p = hom_space(*sys.P), hom_n = hom_space(*sys.N);
  const MapSpace zr_m = zr_space(*sys.M), zr_p = zr_space(*sys.P), zr_n = zr_space(*sys.N);
  const TripleSpace hom_triples = hom_triple_space(sys);
  const TripleSpace compatible = compatible_triples(sys);
  const TripleSpace joint = joint_rosenblum(sys);
  const TripleSpace zr_triples = zr_triple_space(sys);

  r.numerator_naive = hom_m.dim() + hom_p.dim() + hom_n.dim();
  r.numerator_compatible = compatible.dim();
  r.denominator_naive = zr_m.dim() + zr_p.dim() + zr_n.dim();
  r.denominator_joint = joint.dim();
  r.quotient_naive = static_cast<long>(r.numerator_naive) - static_cast<long>(r.denominator_naive);
  r.quotient_corrected = static_cast<long>(r.numerator_compatible) - static_cast<long>(r.denominator_joint);
  r.naive_reading_agrees = r.quotient_naive == static_cast<long>(r.h1_T_bruteforce);

  // (a)-(c): corner decomposition of every basis derivation of T.
  VerdictBuilder blocks(checks::kBlockStructure), round_trip(checks::kReconstruction),
      identities(checks::kCornerIdentities);
  std::vector<CornerData> corners;
  if (!r.unital) {
    const std::string why = "A, B and C are not all unital";
    blocks.not_applicable(why);
    round_trip.not_applicable(why);
    identities.not_applicable(why);
  } else {
    for (std::size_t i = 0; i < der.dim(); ++i) {
      const LinearMap d = der.basis_map(i);
      const std::string tag = "Der(T) basis #" + std::to_string(i);
      CornerData c;
      try {
        c = extract_corners(t, d);
      } catch (const CornerStructureError& e) {
        blocks.fail(tag + ": " + e.what());
        continue;
      }
      if (reconstruct(t, c) != d) round_trip.fail(tag + ": reconstructed map differs from D");
      if (const auto rep = check_corner_identities(t, c); !rep.ok())
        identities.fail(tag + ": " + rep.to_string(1));
      corners.push_back(std::move(c));
    }
  }
  r.verdicts.push_back(blocks.finish(count_detail(der.dim(), "basis derivations")));
  r.verdicts.push_back(round_trip.finish(count_detail(der.dim(), "basis derivations")));
  r.verdicts.push_back(identities.finish(count_detail(der.dim(), "basis derivations")));

  // (d): block-diagonal assembly from extracted corners and from compatible
  // Hom triples; incompatible Hom triples must not assemble to derivations.
  VerdictBuilder assembly(checks::kDiagonalAssembly);
  std::size_t assembled = 0, rejected = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    try {
      assemble_diagonal(t, corners[i].parts);
      ++assembled;
    } catch (const std::exception& e) {
      assembly.fail("corners of Der(T) basis #" + std::to_string(i) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < compatible.dim(); ++i) {
    const HomTriple triple = HomTriple::from_vector(sys, compatible.space.basis_vector(i));
    DiagonalParts parts = DiagonalParts::zero(t);
    parts.tauM = triple.phi;
    parts.tauP = triple.theta;
    parts.tauN = triple.psi;
    try {
      assemble_diagonal(t, parts);
      ++assembled;
    } catch (const std::exception& e) {
      assembly.fail("compatible triple #" + std::to_string(i) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < hom_triples.dim(); ++i) {
    const HomTriple triple = HomTriple::from_vector(sys, hom_triples.space.basis_vector(i));
    if (check_triple_compatibility(sys, triple).ok()) continue;
    if (is_derivation(t.algebra, triple_map(t, triple)))
      assembly.fail("Hom triple #" + std::to_string(i) + " violates mu-compatibility yet assembles to a derivation");
    else
      ++rejected;
  }
  r.verdicts.push_back(assembly.finish(std::to_string(assembled) + " assemblies are derivations; " +
                                       std::to_string(rejected) + " incompatible Hom triples rejected" +
                                       (sys.mu->tensor.is_zero() ? " (zero pairing: compatibility vacuous)" : "")));

  // (e): Rosenblum spaces sit inside the Hom spaces.
  VerdictBuilder inclusions(checks::kRosenblumInclusions);
  if (!is_subset(zr_m.space, hom_m.space)) inclusions.fail("ZR(M) not inside Hom(M)");
  if (!is_subset(zr_p.space, hom_p.space)) inclusions.fail("ZR(P) not inside Hom(P)");
  if (!is_subset(zr_n.space, hom_n.space)) inclusions.fail("ZR(N) not inside Hom(N)");
  if (!is_subset(joint.space, compatible.space)) inclusions.fail("joint Rosenblum image not inside compatible triples");
  if (!is_subset(joint.space, zr_triples.space)) inclusions.fail("joint Rosenblum image not inside ZR+ZR+ZR");
  r.verdicts.push_back(inclusions.finish("ZR <= Hom for M, P, N; joint <= compatible; joint <= ZR+ZR+ZR"));

  // (f): inner-ness of triple derivations, via central witnesses and via Inn(T).
  VerdictBuilder inner(checks::kInnerTripleCriterion);
  std::size_t inner_count = 0;
  for (std::size_t i = 0; i < compatible.dim(); ++i) {
    const HomTriple triple = HomTriple::from_vector(sys, compatible.space.basis_vector(i));
    try {
      const LinearMap d = build_triple_derivation(t, triple);
      const bool by_witness = is_inner_triple(t, triple).has_value();
      const bool by_engine = inn.contains(d);
      if (by_witness != by_engine)
        inner.fail("compatible triple #" + std::to_string(i) + ": central witness says " +
                   (by_witness ? "inner" : "outer") + ", Inn(T) says " + (by_engine ? "inner" : "outer"));
      inner_count += by_engine ? 1 : 0;
    } catch (const std::exception& e) {
      inner.fail("compatible triple #" + std::to_string(i) + ": " + e.what());
    }
  }
  r.verdicts.push_back(inner.finish(count_detail(compatible.dim(), "compatible basis triples") + ", " +
                                    std::to_string(inner_count) + " inner"));

  // (g): the quotient formula, both readings, against brute force.
  const std::string brute = "brute-force H1(T) = " + std::to_string(r.h1_T_bruteforce);
  Verdict joint_v{std::string(checks::kQuotientJoint), Status::NotApplicable, {}};
  Verdict naive_v{std::string(checks::kQuotientDirectSum), Status::NotApplicable, {}};
  if (!r.unital) {
    joint_v.detail = naive_v.detail = "A, B and C are not all unital";
  } else if (!r.precondition_holds) {
    joint_v.detail = naive_v.detail = "H1 of a corner algebra is nonzero (A: " + std::to_string(r.h1_A) +
                                      ", B: " + std::to_string(r.h1_B) + ", C: " + std::to_string(r.h1_C) + ")";
  } else {
    const bool ok = r.quotient_corrected == static_cast<long>(r.h1_T_bruteforce);
    joint_v.status = ok ? Status::Pass : Status::Fail;
    joint_v.detail = std::to_string(r.numerator_compatible) + " - " + std::to_string(r.denominator_joint) + " = " +
                     std::to_string(r.quotient_corrected) + (ok ? " == " : " != ") + brute;
    naive_v.status = r.naive_reading_agrees ? Status::Pass : Status::Fail;
    naive_v.detail = std::to_string(r.numerator_naive) + " - " + std::to_string(r.denominator_naive) + " = " +
                     std::to_string(r.quotient_naive) + (r.naive_reading_agrees ? " == " : " != ") + brute +
                     (r.naive_reading_agrees ? "" : " (discrepancy)");
  }
  r.verdicts.push_back(std::move(joint_v));
  r.verdicts.push_back(std::move(naive_v));
  return r;
}

namespace {

nlohmann::ordered_json report_json(const CohomologyReport& r) {
  nlohmann::ordered_json j;
  j["instance_id"] = r.instance_id;
  nlohmann::ordered_json dims;
  for (Block b : kAllBlocks) dims[std::string(block_name(b))] = r.dims[static_cast<std::size_t>(b)];
  j["dims"] = dims;
  j["dim_T"] = r.dim_T;
  j["unital"] = r.unital;
  j["precondition"] = {{"h1_A", r.h1_A}, {"h1_B", r.h1_B}, {"h1_C", r.h1_C}, {"holds", r.precondition_holds}};
  j["dim_der_T"] = r.dim_der_T;
  j["dim_inn_T"] = r.dim_inn_T;
  j["h1_T_bruteforce"] = r.h1_T_bruteforce;
  j["numerator_naive"] = r.numerator_naive;
  j["numerator_compatible"] = r.numerator_compatible;
  j["denominator_naive"] = r.denominator_naive;
  j["denominator_joint"] = r.denominator_joint;
  j["quotient_naive"] = r.quotient_naive;
  j["quotient_corrected"] = r.quotient_corrected;
  j["naive_reading_agrees"] = r.naive_reading_agrees;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"check", v.check}, {"status", std::string(status_name(v.status))}, {"detail", v.detail}});
  j["verdicts"] = verdicts;
  j["all_passed"] = r.all_passed();
  return j;
}

}  // namespace

std::string to_json(const CohomologyReport& report, int indent) { return report_json(report).dump(indent) + "\n"; }

std::string to_json(const std::vector<CohomologyReport>& reports, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent) + "\n";
}

std::string render_text(const CohomologyReport& r) {
  std::ostringstream os;
  os << "instance " << r.instance_id << "\n";
  os << "  dims      A=" << r.dims[0] << " M=" << r.dims[1] << " P=" << r.dims[2] << " B=" << r.dims[3]
     << " N=" << r.dims[4] << " C=" << r.dims[5] << "  (dim T = " << r.dim_T << ", "
     << (r.unital ? "unital" : "non-unital") << ")\n";
  os << "  H1 corners  A=" << r.h1_A << " B=" << r.h1_B << " C=" << r.h1_C
     << (r.precondition_holds ? "  (all vanish)" : "  (precondition fails)") << "\n";
  os << "  Der(T) = " << r.dim_der_T << ", Inn(T) = " << r.dim_inn_T << ", H1(T) = " << r.h1_T_bruteforce << "\n";
  os << "  joint reading       " << r.numerator_compatible << " - " << r.denominator_joint << " = "
     << r.quotient_corrected << "\n";
  os << "  direct-sum reading  " << r.numerator_naive << " - " << r.denominator_naive << " = " << r.quotient_naive
     << (r.naive_reading_agrees ? "" : "  [differs from H1(T)]") << "\n";
  for (const auto& v : r.verdicts)
    os << "  [" << status_name(v.status) << "] " << v.check << ": " << v.detail << "\n";
  return os.str();
}

}  // namespace tri3

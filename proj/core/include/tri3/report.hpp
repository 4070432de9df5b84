#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tri3/triangular.hpp"

namespace tri3 {

enum class Status { Pass, Fail, NotApplicable };

std::string_view status_name(Status s);

struct Verdict {
  std::string check;
  Status status = Status::NotApplicable;
  std::string detail;
};

// Names of the checks run by verify_theorems, in execution order.
namespace checks {
inline constexpr std::string_view kBlockStructure = "block_structure";
inline constexpr std::string_view kReconstruction = "reconstruction_round_trip";
inline constexpr std::string_view kCornerIdentities = "corner_identities";
inline constexpr std::string_view kDiagonalAssembly = "diagonal_assembly";
inline constexpr std::string_view kRosenblumInclusions = "rosenblum_inclusions";
inline constexpr std::string_view kInnerTripleCriterion = "inner_triple_criterion";
inline constexpr std::string_view kQuotientJoint = "cohomology_quotient_joint";
inline constexpr std::string_view kQuotientDirectSum = "cohomology_quotient_direct_sum";
}  // namespace checks

/// Everything verify_theorems computes for one instance.
///
/// The H^1(T) quotient is reported under two readings: the direct-sum one
/// (Hom + Hom + Hom over ZR + ZR + ZR, independent Rosenblum spaces) and the
/// joint one (mu-compatible triples over the Rosenblum image of a shared
/// central (x, y, z)). Only the joint reading is a pass/fail criterion; the
/// direct-sum agreement is recorded as data.
struct CohomologyReport {
  std::string instance_id;
  std::array<std::size_t, 6> dims{};  // A, M, P, B, N, C
  std::size_t dim_T = 0;
  bool unital = false;

  std::size_t h1_A = 0, h1_B = 0, h1_C = 0;
  bool precondition_holds = false;  // H^1 of all three corners vanishes

  std::size_t dim_der_T = 0;
  std::size_t dim_inn_T = 0;
  std::size_t h1_T_bruteforce = 0;

  std::size_t numerator_naive = 0;       // dim Hom(M) + dim Hom(P) + dim Hom(N)
  std::size_t numerator_compatible = 0;  // mu-compatible Hom triples
  std::size_t denominator_naive = 0;     // dim ZR(M) + dim ZR(P) + dim ZR(N)
  std::size_t denominator_joint = 0;     // shared-(x,y,z) Rosenblum image
  long quotient_naive = 0;
  long quotient_corrected = 0;
  bool naive_reading_agrees = false;

  std::vector<Verdict> verdicts;

  const Verdict* verdict(std::string_view check) const;
  /// True when no check other than the direct-sum reading failed.
  bool all_passed() const;
};

/// Runs the full verification pipeline. Check failures are recorded as
/// verdicts with witnesses; only malformed input throws.
CohomologyReport verify_theorems(const TriSystem& sys, std::string instance_id);

/// Canonical JSON rendering (fixed key order, byte-stable for equal reports).
std::string to_json(const CohomologyReport& report, int indent = 2);
/// JSON array of several reports, same formatting rules.
std::string to_json(const std::vector<CohomologyReport>& reports, int indent = 2);
std::string render_text(const CohomologyReport& report);

}  // namespace tri3

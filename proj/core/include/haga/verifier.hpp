#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haga/config.hpp"

namespace haga {

/// One identifier per verified statement about the fold configuration.
enum class CheckId {
  P3_1_TANGENT,      // line B'E touches delta
  P3_1_EF,           // |EF| by the case table
  T3_2_HAGA,         // |AE||AF| = 2bc
  T4_1_RADII,        // radii of alpha, beta, gamma are a, b, c
  T4_2_SUM,          // d = +-a +-b +-c by case
  T4_2_PRODUCT,      // ad = bc
  T4_3_BETA_TOUCH,   // beta touches B'E at B'
  SET_INEXCIRCLES,   // {alpha, beta, gamma, delta} = tritangent circles of AEF
  T5_1_RADIUS,       // 2 r1 = |EF|
  T5_1_MIDPOINT,     // eps1 touches EF at its midpoint
  P6_1_FGDH,         // a = |FG| - |DH| or |DH| - |FG|
  T6_2_R3R4,         // r3 = r4
  T6_2_A_SUM,        // a = r2 + r4
  T6_3_CONGRUENT,    // r5 = r6
  T2_2_HANSEN_AEF,   // Hansen relations on AEF
  T6_TANGENT_PERP,   // common tangent of eps3, eps5 is perpendicular to AB
};

inline constexpr std::array<CheckId, 16> kAllChecks = {
    CheckId::P3_1_TANGENT,  CheckId::P3_1_EF,         CheckId::T3_2_HAGA,
    CheckId::T4_1_RADII,    CheckId::T4_2_SUM,        CheckId::T4_2_PRODUCT,
    CheckId::T4_3_BETA_TOUCH, CheckId::SET_INEXCIRCLES, CheckId::T5_1_RADIUS,
    CheckId::T5_1_MIDPOINT, CheckId::P6_1_FGDH,       CheckId::T6_2_R3R4,
    CheckId::T6_2_A_SUM,    CheckId::T6_3_CONGRUENT,  CheckId::T2_2_HANSEN_AEF,
    CheckId::T6_TANGENT_PERP};

std::string_view to_string(CheckId id);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  CheckId id;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Rat> witness;  // exact nonzero residue on Fail
  std::string note;            // failing sub-condition or reason for NotApplicable
};

struct VerificationReport {
  Rat d;
  Rat e;
  HagaCase kind = HagaCase::H1;
  std::vector<CheckResult> results;  // one per CheckId, in kAllChecks order

  const CheckResult& result(CheckId id) const;
  int count(CheckStatus status) const;
  bool any_fail() const { return count(CheckStatus::Fail) > 0; }
};

/// Evaluates every check from the points stored in `cfg` (lengths and
/// circles are re-derived, so a tampered configuration is detected).
VerificationReport verify(const HagaConfig& cfg);

/// build + verify for each e, order-preserving. Throws InvalidSquare when d <= 0.
std::vector<VerificationReport> sweep(const Rat& d, std::span<const Rat> e_values);

std::set<HagaCase> case_coverage(std::span<const VerificationReport> reports);

}  // namespace haga

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "negdep/dependence.hpp"

namespace negdep {

/// Implications that hold for every finite law. The open ones (NRD => NLTD,
/// NRD => NRTD, NRD => NA) are deliberately absent.
inline constexpr std::pair<Property, Property> kSafeImplications[] = {
    {Property::kNA, Property::kNSMD},    {Property::kNA, Property::kNOD},
    {Property::kNSMD, Property::kNOD},   {Property::kNRD, Property::kNRD1},
    {Property::kNRD1, Property::kNLTD1}, {Property::kNRD1, Property::kNRTD1},
    {Property::kNLTD, Property::kNLTD1}, {Property::kNRTD, Property::kNRTD1},
    {Property::kNLTD, Property::kNLOD},  {Property::kNRTD, Property::kNUOD},
    {Property::kNLTD1, Property::kNLOD}, {Property::kNRTD1, Property::kNUOD},
    {Property::kNOD, Property::kNLOD},   {Property::kNOD, Property::kNUOD},
};

struct AuditResult {
  std::map<Property, Verdict> verdicts;
  std::vector<std::string> violations;
  /// Exploratory mode: NRD holds while NLTD, NRTD or NA fails.
  std::vector<std::string> open_question_hits;
};

/// Runs every checker without a bound on |J| and tests kSafeImplications.
/// Throws kImplicationViolation (listing all violations) if any fails; every
/// failing verdict's witness is also rechecked, a failed recheck is kInternal.
AuditResult audit_implications(const FiniteJointDistribution& d, CheckOptions options = {},
                               bool exploratory = false);

}  // namespace negdep

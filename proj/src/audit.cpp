#include "negdep/audit.hpp"

#include "negdep/error.hpp"

namespace negdep {

AuditResult audit_implications(const FiniteJointDistribution& d, CheckOptions options,
                               bool exploratory) {
  options.max_j.reset();
  AuditResult result;
  for (Property p : kAllProperties) {
    Verdict v = check_property(d, p, options);
    if (v.witness && !recheck(d, *v.witness)) {
      throw Error(ErrorCode::kInternal,
                  std::string(property_name(p)) + " witness does not reproduce its violation");
    }
    result.verdicts.emplace(p, std::move(v));
  }
  for (const auto& [premise, conclusion] : kSafeImplications) {
    if (result.verdicts.at(premise).holds && !result.verdicts.at(conclusion).holds) {
      result.violations.push_back(std::string(property_name(premise)) + " holds but " +
                                  std::string(property_name(conclusion)) + " fails");
    }
  }
  if (exploratory && result.verdicts.at(Property::kNRD).holds) {
    for (Property p : {Property::kNLTD, Property::kNRTD, Property::kNA}) {
      if (!result.verdicts.at(p).holds) {
        result.open_question_hits.push_back("NRD holds but " + std::string(property_name(p)) +
                                            " fails");
      }
    }
  }
  if (!result.violations.empty()) {
    std::string msg = "safe implication violated:";
    for (const auto& v : result.violations) msg += " [" + v + "]";
    throw Error(ErrorCode::kImplicationViolation, msg);
  }
  return result;
}

}  // namespace negdep

#include "linadd/report.hpp"

namespace linadd {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::degenerate_branch:
      return "degenerate-branch";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::violated:
      return "violated";
  }
  return "unknown";
}

nlohmann::ordered_json TheoremReport::to_json() const {
  return {{"theorem", theorem},
          {"ambient", ambient},
          {"inputs", inputs},
          {"dims", dims},
          {"bound", bound},
          {"verdict", verdict_name(verdict)},
          {"certificate", certificate.is_null()
                              ? nlohmann::ordered_json(nullptr)
                              : certificate}};
}

std::string TheoremReport::to_json_line() const { return to_json().dump(); }

}  // namespace linadd

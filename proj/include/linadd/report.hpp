#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace linadd {

enum class Verdict { holds, degenerate_branch, not_applicable, violated };

const char* verdict_name(Verdict v);

// Structured verdict for one theorem instance. Serializes to one JSON-lines
// record with fixed field order {theorem, ambient, inputs, dims, bound,
// verdict, certificate}.
struct TheoremReport {
  std::string theorem;
  std::string ambient;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  long long bound = 0;
  Verdict verdict = Verdict::holds;
  nlohmann::ordered_json certificate;

  nlohmann::ordered_json to_json() const;
  std::string to_json_line() const;
};

}  // namespace linadd

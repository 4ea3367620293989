#pragma once

// Uniform pass/fail record for identity checks.  Every verification
// routine in the library appends one record per checked instance so the
// CLI and the acceptance driver can report and serialize them uniformly.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qvir {

struct CheckRecord {
  std::string identity;  // which identity / equation family
  std::string indices;   // parameter tuple, human readable
  bool pass = false;
  std::string detail;    // optional mismatch diagnostics
};

using Report = std::vector<CheckRecord>;

inline bool all_pass(const Report& r) {
  for (const auto& rec : r)
    if (!rec.pass) return false;
  return true;
}

inline void to_json(nlohmann::json& j, const CheckRecord& r) {
  j = nlohmann::json{{"identity", r.identity}, {"indices", r.indices}, {"pass", r.pass}};
  if (!r.detail.empty()) j["detail"] = r.detail;
}

}  // namespace qvir

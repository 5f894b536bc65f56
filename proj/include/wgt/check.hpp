#pragma once

#include <string>
#include <vector>

namespace wgt {

enum class Status { Pass, Fail, Skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skip:
      return "SKIP";
  }
  return "?";
}

// One named check.  `detail` is informational; `witness` is set on failure.
struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::string witness;
  long instances = 0;
};

inline CheckRecord make_check(std::string name, bool ok, std::string witness = {}, long instances = 1) {
  CheckRecord c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  if (!ok) c.witness = std::move(witness);
  c.instances = instances;
  return c;
}

inline bool all_pass(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

}  // namespace wgt

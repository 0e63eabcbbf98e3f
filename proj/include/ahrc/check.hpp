#pragma once

#include <string>
#include <vector>

namespace ahrc {

/// Pass/fail outcome of an invariant suite with one ledger line per check.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;
  std::string first_failure;

  void record(bool holds, const std::string& line);
  void merge(const CheckReport& other);
};

}  // namespace ahrc

#include "ahrc/check.hpp"

namespace ahrc {

void CheckReport::record(bool holds, const std::string& line) {
  lines.push_back((holds ? "ok   " : "FAIL ") + line);
  if (!holds && ok) {
    ok = false;
    first_failure = line;
  }
}

void CheckReport::merge(const CheckReport& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  if (!other.ok && ok) {
    ok = false;
    first_failure = other.first_failure;
  }
}

}  // namespace ahrc

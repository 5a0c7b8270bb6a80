#pragma once

#include <string>
#include <utility>

namespace crg {

struct CheckResult {
  bool passed = true;
  std::string detail;

  explicit operator bool() const { return passed; }
  static CheckResult fail(std::string why) { return CheckResult{false, std::move(why)}; }
};

}  // namespace crg

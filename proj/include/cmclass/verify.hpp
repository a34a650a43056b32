#pragma once

#include <string>
#include <vector>

namespace cmclass {

struct VerifyOptions {
  unsigned threads = 0;
  /// Largest m, n, p in the segre3 count sweep.
  int segre3Max = 5;
  /// Largest m, n, p for which the generic enumerator cross-checks conic sets.
  int segre3GenericMax = 4;
  /// Test hook: compares CM counts against a formula that is off by one.
  bool injectFault = false;
};

struct VerifyCheck {
  int criterion = 0;
  std::string name;
  bool hard = true;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  /// Rendered tables, in order.
  std::vector<std::string> sections;

  bool hard_failed() const;
  std::string render() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace cmclass

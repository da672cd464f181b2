// One line per acceptance criterion; exit status 1 if any fails.

#include <iostream>

#include "lascar/errors.hpp"
#include "lascar/suite.hpp"

int main() {
  lascar::SuiteConfig config;
  bool ok = true;
  try {
    for (int id = 1; id <= 8; ++id) {
      lascar::CheckResult r = lascar::run_criterion(id, config);
      std::cout << r.line() << std::endl;
      ok = ok && r.passed();
    }
  } catch (const lascar::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 3;
  }
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  return ok ? 0 : 1;
}

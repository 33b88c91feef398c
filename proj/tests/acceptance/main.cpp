// Acceptance gate: one line per criterion, exit status 1 if any fails.
#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
  const std::string data = argc > 1 ? argv[1] : nakaoka::acceptance::default_data_dir();
  bool ok = true;
  for (const auto& r : nakaoka::acceptance::run_paper_suite(data)) {
    std::cout << nakaoka::acceptance::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

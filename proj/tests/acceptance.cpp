// Runs acceptance criteria 1-10, one line each; exit status 0 iff all pass.
#include <iostream>

#include "octo2/verify.hpp"

int main() {
  int failed = 0;
  int id = 0;
  for (const auto& run : octo2::all_criteria()) {
    octo2::CriterionResult r{++id, "", false, ""};
    try {
      r = run();
    } catch (const octo2::Error& e) {
      r.detail = std::string("error: ") + e.what();
    }
    std::cout << octo2::format_line(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

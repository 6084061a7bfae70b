// Acceptance runner: one PASS/FAIL line per criterion. With an argument, runs only that
// criterion; the exit status is nonzero when any criterion run fails.
#include "bv/verify.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<int> ids;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "-v" || arg == "--verbose") {
      verbose = true;
      continue;
    }
    try {
      ids.push_back(std::stoi(arg));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [-v] [criterion 1..12 ...]\n";
      return 64;
    }
  }
  if (ids.empty())
    for (int i = 1; i <= 12; ++i) ids.push_back(i);

  int failures = 0;
  for (int id : ids) {
    if (id < 1 || id > 12) {
      std::cerr << "criterion must be in 1..12\n";
      return 64;
    }
    auto r = bv::verify::run_criterion(id);
    std::cout << bv::verify::result_line(r) << std::endl;
    if (verbose || !r.passed())
      for (const auto& c : r.checks)
        std::cout << "    " << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                  << "\n";
    if (!r.passed()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

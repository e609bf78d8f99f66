// Dedicated acceptance binary: runs the verify-paper criteria and prints one
// PASS/FAIL line per criterion.  Exit 0 iff every criterion passes.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "sgp/verify.hpp"

int main(int argc, char** argv) {
  sgp::verify::Options options;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--suite" && i + 1 < argc) {
      options.suite = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--no-timings") {
      options.timings = false;
    } else {
      std::fprintf(stderr, "usage: acceptance_tests [--suite all|finite|symbolic] [--seed N] [--no-timings]\n");
      return 2;
    }
  }
  auto const report = sgp::verify::run(options);
  std::cout << report.render(options.timings);
  return report.all_pass() ? 0 : 1;
}

// Runs the acceptance criteria and prints one line per criterion.
// Usage: circpot_acceptance [grid_n] [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  circpot::acceptance::Options options;
  if (argc > 1) options.grid_n = std::stoul(argv[1]);
  if (argc > 2) options.seed = std::stoull(argv[2]);
  const auto results = circpot::acceptance::run_suite(options, &std::cout);
  int failed = 0;
  for (const auto& c : results) failed += c.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria pass"
                            : std::to_string(failed) + " of " + std::to_string(results.size()) + " criteria fail")
            << "\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

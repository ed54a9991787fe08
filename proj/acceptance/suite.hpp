#pragma once

// The twelve acceptance criteria, shared by the `selftest` subcommand and the
// standalone acceptance runner.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "circpot/simplex_qp.hpp"

namespace circpot::acceptance {

struct Options {
  std::size_t grid_n = 4096;
  std::uint64_t seed = 1;
  SolverConfig solver;
  // Scale every kernel value by 1.5 while the suite runs.
  bool kernel_fault = false;
};

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json metrics;
};

// Tolerances of quadrature-limited checks grow like (4096/N)^{3/4} below
// N = 4096 and stay fixed above.
double tolerance_scale(std::size_t grid_n);

// Runs every criterion in order. When `progress` is set, one line per
// criterion is written to it as soon as the criterion finishes.
std::vector<Criterion> run_suite(const Options& options, std::ostream* progress = nullptr);

nlohmann::json to_json(const Options& options, const std::vector<Criterion>& results);
std::string format_line(const Criterion& c);

}  // namespace circpot::acceptance

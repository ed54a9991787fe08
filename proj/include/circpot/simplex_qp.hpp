#pragma once

// Minimization of w^T G w over the probability simplex, where G is a
// symmetric circulant matrix on the grid restricted to a subset of cells.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace circpot {

enum class StepRule { frank_wolfe, projected_gradient };

std::string to_string(StepRule rule);
StepRule parse_step_rule(const std::string& name);

struct SolverConfig {
  double tolerance = 1e-8;  // relative KKT residual
  int max_iterations = 50000;
  StepRule step_rule = StepRule::frank_wolfe;

  void validate() const;
};

struct SimplexQpResult {
  std::vector<double> weights;  // one per cell, same order as the input cells
  double objective = 0.0;
  int iterations = 0;
  int polish_rounds = 0;
  double kkt_residual = 0.0;
};

// `row` is the first row of the circulant (row[d] = G(j, j+d), row[d] ==
// row[N-d]); `cells` are distinct grid indices in increasing order.
//
// The iteration starts at the barycenter. At checkpoints 64, 256, 1024, ...
// and at the end, an active-set polish solves the equality-constrained
// problem on the current support, drops blocking cells and adds the most
// violating ones until the KKT conditions hold. Throws ConvergenceError with
// the best iterate when the residual stays above tolerance.
SimplexQpResult minimize_on_simplex(const std::vector<double>& row, std::span<const std::size_t> cells,
                                    const SolverConfig& cfg);

// Relative KKT residual of w for the circulant problem.
double simplex_kkt_residual(const std::vector<double>& row, std::span<const std::size_t> cells,
                            std::span<const double> weights);

}  // namespace circpot

#pragma once

// Classical (Riesz / logarithmic) capacity by energy minimization over
// probability measures, and the L2 (Meyers) capacity.

#include <optional>
#include <string>
#include <vector>

#include "circpot/circle.hpp"
#include "circpot/samples.hpp"
#include "circpot/simplex_qp.hpp"

namespace circpot {

enum class CapacityMethod { classical, l2 };

std::string to_string(CapacityMethod method);

// The two exponent conventions, kept in one place:
// C_{1-beta} uses the kernel k_{1-beta}; C_{alpha,2} convolves with k_{1-alpha/2}.
inline double classical_exponent_for(double beta) { return 1.0 - beta; }
inline double l2_convolution_exponent(double alpha) { return 1.0 - 0.5 * alpha; }

struct CapacityEstimate {
  double value = 0.0;
  CapacityMethod method = CapacityMethod::classical;
  double alpha = 0.0;
  double kernel_exponent = 0.0;
  std::size_t grid_n = 0;
  int iterations = 0;
  int polish_rounds = 0;
  double kkt_residual = 0.0;
  // Minimal energy (classical) or squared L2 norm of the optimal density (l2).
  double energy_or_norm = 0.0;
  // Classical: the discrete equilibrium measure. L2: the dual measure on E.
  std::optional<DiscreteMeasure> measure;
  // L2 only: optimal density f on the grid and min over E of (k * f).
  std::vector<double> density;
  double min_constraint = 0.0;
  // Logarithmic kernel: the quadratic form need not be convex.
  bool nonconvex_kernel = false;
};

// C_alpha(E) = 1 / min { I_alpha(mu) : mu probability on E }, alpha in [0,1).
// Empty E has capacity 0.
CapacityEstimate classical_capacity(const GridSet& set, double alpha, const SolverConfig& cfg = {});

// C_{alpha,2}(E) = inf { ||f||^2 : f >= 0, k_{1-alpha/2} * f >= 1 on E },
// alpha in (0,1], with normalized measure |dz|/2pi in both the norm and the
// convolution. Empty E has capacity 0.
CapacityEstimate l2_capacity(const GridSet& set, double alpha, const SolverConfig& cfg = {});

// Gram row (1/N) K*K of the convolution kernel k_exponent, as a circulant row.
std::vector<double> l2_gram_row(const CircleGrid& grid, double kernel_exponent);

struct ComparabilityReport {
  double beta = 0.0;
  double c_classical = 0.0;  // C_{1-beta}
  double c_l2 = 0.0;         // C_{beta,2}
  double ratio = 0.0;        // c_l2 / c_classical
  CapacityEstimate classical;
  CapacityEstimate l2;
};

ComparabilityReport comparability_report(const GridSet& set, double beta, const SolverConfig& cfg = {});

}  // namespace circpot

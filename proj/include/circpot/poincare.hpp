#pragma once

// Both sides of the capacitary Poincare inequality
//   [ (1/|I|) int_I |f| ]^2 <= c |I|^{alpha-beta} / C_{beta,2}(E cap I) * D_{I,alpha}(f)
// for boundary samples f vanishing on E.

#include <span>
#include <vector>

#include "circpot/capacity.hpp"
#include "circpot/circle.hpp"
#include "circpot/samples.hpp"

namespace circpot {

struct PoincareParams {
  double alpha = 1.0;
  double beta = 0.5;
  double gamma = 0.5;

  void validate() const;
};

struct PoincareReport {
  double lhs = 0.0;     // squared mean of |f| over I
  double cap = 0.0;     // C_{beta,2}(E cap I)
  double energy = 0.0;  // D_{I,alpha}(f)
  double scale = 0.0;   // |I|^{alpha-beta}
  double ratio = 0.0;   // lhs * cap / (scale * energy)
  PoincareParams params;
  std::size_t grid_n = 0;
  double arc_length = 0.0;
  std::size_t zero_cells = 0;  // cells in E cap I
  int cap_iterations = 0;
  double cap_kkt_residual = 0.0;
};

// Largest |f| tolerated on E cap I.
inline constexpr double kVanishingTolerance = 1e-8;

PoincareReport poincare_check(const BoundarySamples& f, const GridSet& zero_set, const Arc& arc,
                              const PoincareParams& params, const SolverConfig& cfg = {});

struct PoincareCase {
  BoundarySamples f;
  GridSet zero_set;
  Arc arc;
};

// Largest ratio over the family: an empirical lower bound for the constant.
double constant_estimate(std::span<const PoincareCase> family, const PoincareParams& params,
                         const SolverConfig& cfg = {});

// min(1, d(t, E) / delta), d the arclength distance to the nearest cell
// center of E. Vanishes on E by construction.
BoundarySamples spike_function(const GridSet& zero_set, double delta);

}  // namespace circpot

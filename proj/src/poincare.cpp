#include "circpot/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circpot/energy.hpp"
#include "circpot/errors.hpp"

namespace circpot {

void PoincareParams::validate() const {
  if (!(beta > 0.0 && beta <= alpha && alpha <= 1.0)) throw RangeError("need 0 < beta <= alpha <= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw RangeError("gamma must lie in (0, 1)");
}

PoincareReport poincare_check(const BoundarySamples& f, const GridSet& zero_set, const Arc& arc,
                              const PoincareParams& params, const SolverConfig& cfg) {
  params.validate();
  if (!(f.grid() == zero_set.grid())) throw ArgumentError("f and E must share a grid");
  if (arc.length() > params.gamma * kPi + kAngleTol) throw RangeError("arc longer than gamma pi");

  const GridSet arc_cells = GridSet::interior(f.grid(), arc);
  if (arc_cells.count() < 8) throw ResolutionError("grid does not resolve the arc (need 8 cells)");
  const GridSet zeros = zero_set.intersect(arc_cells);
  if (zeros.empty()) throw PreconditionError("E does not meet the arc on this grid");
  for (std::size_t k : zeros.indices()) {
    if (std::abs(f[k]) >= kVanishingTolerance) throw PreconditionError("f does not vanish on E cap I");
  }

  PoincareReport report;
  report.params = params;
  report.grid_n = f.grid().size();
  report.arc_length = arc.length();
  report.zero_cells = zeros.count();

  double mean = 0.0;
  const std::vector<std::size_t> cells = arc_cells.indices();
  for (std::size_t k : cells) mean += std::abs(f[k]);
  mean /= static_cast<double>(cells.size());
  report.lhs = mean * mean;
  report.energy = dirichlet_energy_on(f, arc_cells, arc_cells, params.alpha).value;
  report.scale = std::pow(arc.length(), params.alpha - params.beta);

  const CapacityEstimate cap = l2_capacity(zeros, params.beta, cfg);
  report.cap = cap.value;
  report.cap_iterations = cap.iterations;
  report.cap_kkt_residual = cap.kkt_residual;

  // Zero energy means f is constant on I, hence zero there.
  report.ratio = report.energy > 0.0 ? report.lhs * report.cap / (report.scale * report.energy) : 0.0;
  return report;
}

double constant_estimate(std::span<const PoincareCase> family, const PoincareParams& params,
                         const SolverConfig& cfg) {
  if (family.empty()) throw ArgumentError("constant_estimate needs a nonempty family");
  double best = 0.0;
  for (const PoincareCase& c : family) best = std::max(best, poincare_check(c.f, c.zero_set, c.arc, params, cfg).ratio);
  return best;
}

BoundarySamples spike_function(const GridSet& zero_set, double delta) {
  if (!(delta > 0.0)) throw ArgumentError("spike sharpness delta must be positive");
  const CircleGrid& grid = zero_set.grid();
  const std::vector<std::size_t> zeros = zero_set.indices();
  if (zeros.empty()) throw ArgumentError("spike function needs a nonempty zero set");
  std::vector<double> values(grid.size(), 1.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t z : zeros) {
      // Exact zero distance on E itself.
      const double d = z == k ? 0.0 : arc_distance(grid.angle(k), grid.angle(z));
      nearest = std::min(nearest, d);
    }
    values[k] = std::min(1.0, nearest / delta);
  }
  return BoundarySamples::from_real(grid, values);
}

}  // namespace circpot

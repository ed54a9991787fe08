#include "circpot/extension.hpp"

#include <algorithm>
#include <cmath>

#include "circpot/energy.hpp"
#include "circpot/errors.hpp"

namespace circpot {

ExtensionSetup::ExtensionSetup(double theta, double gamma) : theta_(theta), gamma_(gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw RangeError("gamma must lie in (0, 1)");
  if (!(theta > 0.0 && theta <= 0.5 * gamma * kPi + kAngleTol)) throw RangeError("theta must lie in (0, gamma pi / 2]");
}

ExtensionCells extension_cells(const CircleGrid& grid, const ExtensionSetup& setup) {
  GridSet i = GridSet::interior(grid, setup.arc_i());
  GridSet j = GridSet::interior(grid, setup.arc_j());
  std::vector<std::uint8_t> left(grid.size(), 0), right(grid.size(), 0);
  const GridSet outside_i = j.minus(i);
  for (std::size_t k : outside_i.indices()) {
    if (grid.angle(k) > 0.0)
      left[k] = 1;
    else
      right[k] = 1;
  }
  return {std::move(i), std::move(j), GridSet(grid, std::move(left)), GridSet(grid, std::move(right))};
}

namespace {

// Linear interpolation of f at angle s using only the (contiguous) I cells;
// constant beyond the outermost I samples.
Complex interpolate_in_i(const BoundarySamples& f, const std::vector<std::size_t>& i_cells, double s) {
  const CircleGrid& grid = f.grid();
  const double lo = grid.angle(i_cells.front());
  const double hi = grid.angle(i_cells.back());
  if (s <= lo) return f[i_cells.front()];
  if (s >= hi) return f[i_cells.back()];
  const double h = grid.cell_width();
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::floor((s - lo) / h)), i_cells.size() - 2);
  const std::size_t a = i_cells[k];
  const std::size_t b = i_cells[k + 1];
  const double frac = std::clamp((s - grid.angle(a)) / h, 0.0, 1.0);
  return (1.0 - frac) * f[a] + frac * f[b];
}

}  // namespace

BoundarySamples extend(const BoundarySamples& f, const ExtensionSetup& setup) {
  const CircleGrid& grid = f.grid();
  const ExtensionCells cells = extension_cells(grid, setup);
  if (cells.l.count() < 8 || cells.r.count() < 8)
    throw ResolutionError("grid does not resolve the reflected arcs L and R (need 8 cells each)");
  const std::vector<std::size_t> i_cells = cells.i.indices();
  if (i_cells.size() < 2) throw ResolutionError("grid does not resolve the arc I");

  const double theta = setup.theta();
  std::vector<Complex> out(grid.size(), Complex{});
  for (std::size_t k : i_cells) out[k] = f[k];
  for (std::size_t k : cells.l.indices()) {
    const double t = grid.angle(k);
    out[k] = interpolate_in_i(f, i_cells, 0.5 * (3.0 * theta - t));
  }
  for (std::size_t k : cells.r.indices()) {
    const double t = grid.angle(k);
    out[k] = interpolate_in_i(f, i_cells, -0.5 * (3.0 * theta + t));
  }
  return BoundarySamples(grid, std::move(out));
}

ExtensionRatio extension_ratio(const BoundarySamples& f, const ExtensionSetup& setup, double alpha) {
  const ExtensionCells cells = extension_cells(f.grid(), setup);
  ExtensionRatio out;
  out.d_i = dirichlet_energy_on(f, cells.i, cells.i, alpha).value;
  if (!(out.d_i > 0.0)) throw DegenerateInputError("f is constant on I, so D_I(f) = 0");
  const BoundarySamples f_tilde = extend(f, setup);
  out.d_j = dirichlet_energy_on(f_tilde, cells.j, cells.j, alpha).value;
  out.ratio = out.d_j / out.d_i;
  return out;
}

SixTermDecomposition six_term_decomposition(const BoundarySamples& f_tilde, const ExtensionSetup& setup,
                                            double alpha) {
  const ExtensionCells c = extension_cells(f_tilde.grid(), setup);
  auto d = [&](const GridSet& a, const GridSet& b) { return dirichlet_energy_on(f_tilde, a, b, alpha).value; };
  SixTermDecomposition out;
  out.d_i = d(c.i, c.i);
  out.d_l = d(c.l, c.l);
  out.d_r = d(c.r, c.r);
  out.d_il = d(c.i, c.l);
  out.d_ir = d(c.i, c.r);
  out.d_lr = d(c.l, c.r);
  return out;
}

BoundarySamples bump_phi(const CircleGrid& grid, const ExtensionSetup& setup) {
  const double theta = setup.theta();
  const double edge = setup.theta_gamma();
  std::vector<double> phi(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = std::abs(grid.angle(k));
    if (t <= theta)
      phi[k] = 1.0;
    else if (t < edge)
      phi[k] = (edge - t) / (edge - theta);
  }
  return BoundarySamples::from_real(grid, phi);
}

TestFunction test_function_f(const BoundarySamples& f_tilde, const BoundarySamples& phi,
                             const ExtensionSetup& setup) {
  if (!(f_tilde.grid() == phi.grid())) throw ArgumentError("f~ and phi must share a grid");
  const CircleGrid& grid = f_tilde.grid();
  const std::vector<std::size_t> j_cells = GridSet::interior(grid, setup.arc_j()).indices();
  if (j_cells.empty()) throw ResolutionError("grid does not resolve J");
  double total = 0.0;
  for (std::size_t k : j_cells) total += std::abs(f_tilde[k]);
  const double m = total / static_cast<double>(j_cells.size());
  if (!(m > 0.0)) throw DegenerateInputError("f~ vanishes on J, so the mean m is zero");
  std::vector<double> values(grid.size(), 0.0);
  for (std::size_t k : j_cells) values[k] = phi[k].real() * std::abs(1.0 - std::abs(f_tilde[k]) / m);
  return {BoundarySamples::from_real(grid, values), m};
}

}  // namespace circpot

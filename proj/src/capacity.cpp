#include "circpot/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unsupported/Eigen/FFT>

#include "circpot/energy.hpp"
#include "circpot/errors.hpp"

namespace circpot {

std::string to_string(CapacityMethod method) {
  return method == CapacityMethod::classical ? "classical" : "l2";
}

namespace {

std::vector<double> spread(const GridSet& set, const std::vector<std::size_t>& cells,
                           const std::vector<double>& weights) {
  std::vector<double> w(set.grid().size(), 0.0);
  for (std::size_t a = 0; a < cells.size(); ++a) w[cells[a]] = weights[a];
  return w;
}

std::vector<double> circulant_apply(const std::vector<double>& row, const std::vector<double>& x) {
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> r(row.begin(), row.end()), xc(x.begin(), x.end()), rf, xf, y;
  fft.fwd(rf, r);
  fft.fwd(xf, xc);
  for (std::size_t k = 0; k < xf.size(); ++k) xf[k] *= rf[k].real();
  fft.inv(y, xf);
  std::vector<double> out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = y[k].real();
  return out;
}

}  // namespace

CapacityEstimate classical_capacity(const GridSet& set, double alpha, const SolverConfig& cfg) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw RangeError("classical capacity needs alpha in [0, 1)");
  cfg.validate();
  CapacityEstimate est;
  est.method = CapacityMethod::classical;
  est.alpha = alpha;
  est.kernel_exponent = alpha;
  est.grid_n = set.grid().size();
  est.nonconvex_kernel = alpha == 0.0;
  const std::vector<std::size_t> cells = set.indices();
  if (cells.empty()) return est;

  const std::vector<double> row = kernel_row(set.grid(), alpha);
  const SimplexQpResult qp = minimize_on_simplex(row, cells, cfg);
  est.iterations = qp.iterations;
  est.polish_rounds = qp.polish_rounds;
  est.kkt_residual = qp.kkt_residual;
  est.energy_or_norm = qp.objective;
  // |log| and power kernels are nonnegative, so the energy is positive; the
  // guard only matters for injected faults.
  est.value = qp.objective > 0.0 ? 1.0 / qp.objective : 0.0;
  est.measure.emplace(set.grid(), spread(set, cells, qp.weights));
  return est;
}

std::vector<double> l2_gram_row(const CircleGrid& grid, double kernel_exponent) {
  const std::vector<double> row = kernel_row(grid, kernel_exponent);
  const std::size_t n = grid.size();
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> r(row.begin(), row.end()), rf, sq;
  fft.fwd(rf, r);
  for (auto& v : rf) v = std::complex<double>(v.real() * v.real(), 0.0);
  fft.inv(sq, rf);
  std::vector<double> gram(n);
  for (std::size_t d = 0; d < n; ++d) gram[d] = sq[d].real() / static_cast<double>(n);
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const double sym = 0.5 * (gram[d] + gram[n - d]);
    gram[d] = sym;
    gram[n - d] = sym;
  }
  return gram;
}

CapacityEstimate l2_capacity(const GridSet& set, double alpha, const SolverConfig& cfg) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("L2 capacity needs alpha in (0, 1]");
  cfg.validate();
  CapacityEstimate est;
  est.method = CapacityMethod::l2;
  est.alpha = alpha;
  est.kernel_exponent = l2_convolution_exponent(alpha);
  est.grid_n = set.grid().size();
  const std::vector<std::size_t> cells = set.indices();
  if (cells.empty()) return est;

  const std::size_t n = set.grid().size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const std::vector<double> row = kernel_row(set.grid(), est.kernel_exponent);
  const std::vector<double> gram = l2_gram_row(set.grid(), est.kernel_exponent);
  const SimplexQpResult qp = minimize_on_simplex(gram, cells, cfg);
  est.iterations = qp.iterations;
  est.polish_rounds = qp.polish_rounds;
  est.kkt_residual = qp.kkt_residual;
  if (!(qp.objective > 0.0)) throw Error("L2 dual energy vanished; the constraint is infeasible");

  // Dual measure mu on E gives the primal density f = K mu / (mu^T G mu).
  const std::vector<double> mu = spread(set, cells, qp.weights);
  std::vector<double> f = circulant_apply(row, mu);
  for (double& x : f) x = std::max(0.0, x / qp.objective);
  double norm = 0.0;
  for (double x : f) norm += x * x;
  norm *= inv_n;

  const std::vector<double> conv = circulant_apply(row, f);
  double min_constraint = std::numeric_limits<double>::infinity();
  for (std::size_t a : cells) min_constraint = std::min(min_constraint, conv[a] * inv_n);

  est.value = norm;
  est.energy_or_norm = norm;
  est.density = std::move(f);
  est.min_constraint = min_constraint;
  est.measure.emplace(set.grid(), mu);
  return est;
}

ComparabilityReport comparability_report(const GridSet& set, double beta, const SolverConfig& cfg) {
  if (!(beta > 0.0 && beta <= 1.0)) throw RangeError("comparability needs beta in (0, 1]");
  ComparabilityReport report;
  report.beta = beta;
  report.classical = classical_capacity(set, classical_exponent_for(beta), cfg);
  report.l2 = l2_capacity(set, beta, cfg);
  report.c_classical = report.classical.value;
  report.c_l2 = report.l2.value;
  report.ratio = report.c_classical > 0.0 ? report.c_l2 / report.c_classical : 0.0;
  return report;
}

}  // namespace circpot

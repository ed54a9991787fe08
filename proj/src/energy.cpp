#include "circpot/energy.hpp"

#include <atomic>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "circpot/errors.hpp"
#include "circpot/parallel.hpp"

namespace circpot {

namespace {

std::atomic<double> g_kernel_fault{1.0};

void check_kernel_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw RangeError("kernel exponent alpha must lie in [0, 1)");
}

void check_dirichlet_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("Dirichlet exponent alpha must lie in (0, 1]");
}

// chord^{-(1+alpha)} for every cell offset d, mirrored so p[d] == p[N-d].
std::vector<double> dirichlet_weights(std::size_t n, double alpha) {
  std::vector<double> p(n, 0.0);
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const double chord = 2.0 * std::sin(kPi * static_cast<double>(d) / static_cast<double>(n));
    p[d] = std::pow(chord, -(1.0 + alpha));
    p[n - d] = p[d];
  }
  return p;
}

}  // namespace

namespace testing {
void set_kernel_fault(double factor) { g_kernel_fault.store(factor); }
double kernel_fault() { return g_kernel_fault.load(); }
}  // namespace testing

double kernel_k(double alpha, double chord) {
  check_kernel_alpha(alpha);
  if (!(chord > 0.0)) throw SingularityError("kernel evaluated at zero chord");
  const double value = alpha == 0.0 ? std::abs(std::log(chord)) : std::pow(chord, -alpha);
  return value * g_kernel_fault.load(std::memory_order_relaxed);
}

double cell_self_energy(double alpha, double h) {
  check_kernel_alpha(alpha);
  if (!(h > 0.0 && h <= kPi)) throw RangeError("cell width must lie in (0, pi]");
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto integrand = [&](double u) {
    const double chord = 2.0 * std::sin(0.5 * u);
    if (!(chord > 0.0)) return 0.0;
    return (h - u) * kernel_k(alpha, chord);
  };
  const double integral = integrator.integrate(integrand, 0.0, h, 1e-14);
  return 2.0 * integral / (h * h);
}

std::vector<double> kernel_row(const CircleGrid& grid, double alpha) {
  const std::size_t n = grid.size();
  std::vector<double> row(n, 0.0);
  row[0] = cell_self_energy(alpha, grid.cell_width());
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const double chord = 2.0 * std::sin(kPi * static_cast<double>(d) / static_cast<double>(n));
    row[d] = kernel_k(alpha, chord);
    row[n - d] = row[d];
  }
  return row;
}

DirichletEnergy dirichlet_energy_on(const BoundarySamples& f, const GridSet& i_cells,
                                    const GridSet& j_cells, double alpha) {
  check_dirichlet_alpha(alpha);
  if (!(f.grid() == i_cells.grid()) || !(f.grid() == j_cells.grid()))
    throw ArgumentError("samples and arcs must share a grid");
  const std::size_t n = f.size();
  const std::vector<double> p = dirichlet_weights(n, alpha);
  const std::vector<std::size_t> cells = i_cells.unite(j_cells).indices();
  const auto in_i = i_cells.mask();
  const auto in_j = j_cells.mask();
  const auto& v = f.values();

  // Sum over unordered pairs a < b with multiplicity [a in I, b in J] +
  // [a in J, b in I]; the expression is symmetric in (I, J).
  std::vector<double> rows(cells.size(), 0.0);
  detail::parallel_for(cells.size(), [&](std::size_t pa) {
    const std::size_t a = cells[pa];
    double acc = 0.0;
    for (std::size_t pb = pa + 1; pb < cells.size(); ++pb) {
      const std::size_t b = cells[pb];
      const int mult = (in_i[a] & in_j[b]) + (in_j[a] & in_i[b]);
      if (mult == 0) continue;
      acc += mult * std::norm(v[a] - v[b]) * p[b - a];
    }
    rows[pa] = acc;
  });
  double total = 0.0;
  for (double r : rows) total += r;

  const double inv_n = 1.0 / static_cast<double>(n);
  DirichletEnergy out;
  out.value = total * inv_n * inv_n;

  const double h = f.grid().cell_width();
  const double cell_factor =
      2.0 * std::pow(h, 3.0 - alpha) / ((2.0 - alpha) * (3.0 - alpha)) / (4.0 * kPi * kPi);
  double diag = 0.0;
  for (std::size_t a : cells) {
    if (!(in_i[a] && in_j[a])) continue;
    const Complex derivative = (v[(a + 1) % n] - v[(a + n - 1) % n]) / (2.0 * h);
    diag += std::norm(derivative) * cell_factor;
  }
  out.diagonal_estimate = diag;
  return out;
}

double dirichlet_energy_local(const BoundarySamples& f, const Arc& i_arc, const Arc& j_arc, double alpha) {
  const GridSet i_cells = GridSet::interior(f.grid(), i_arc);
  const GridSet j_cells = GridSet::interior(f.grid(), j_arc);
  if (i_cells.count() < 8 || j_cells.count() < 8)
    throw ResolutionError("grid does not resolve the arcs (need at least 8 cells each)");
  return dirichlet_energy_on(f, i_cells, j_cells, alpha).value;
}

double dirichlet_energy_global(const BoundarySamples& f, double alpha) {
  const GridSet all = GridSet::full(f.grid());
  return dirichlet_energy_on(f, all, all, alpha).value;
}

double fourier_energy(const FourierCoeffs& coeffs, double alpha) {
  if (!(alpha >= 0.0)) throw RangeError("alpha must be nonnegative");
  const long m = static_cast<long>(coeffs.truncation());
  double total = 0.0;
  for (long k = -m; k <= m; ++k) {
    total += std::norm(coeffs.at(k)) * std::pow(1.0 + static_cast<double>(std::abs(k)), alpha);
  }
  return total;
}

double energy_weight(long n, double alpha) {
  if (n < 1) throw ArgumentError("energy_weight needs n >= 1");
  check_dirichlet_alpha(alpha);
  const double freq = static_cast<double>(n);
  if (alpha == 1.0) return freq;
  // With s = 1 + alpha, the coefficients c_k of |2 sin(t/2)|^{-s} (analytic
  // continuation from s < 1) give w(n) = 2 (c_0 - c_n), where
  // c_0 = Gamma(1-s) / Gamma(1-s/2)^2 and c_n / c_0 = prod_{k<n} (k+s/2)/(k+1-s/2).
  using boost::math::tgamma;
  using boost::math::tgamma_delta_ratio;
  const double half = 0.5 * (1.0 - alpha);  // 1 - s/2
  const double c0 = tgamma(-alpha) / (tgamma(half) * tgamma(half));
  const double ratio = tgamma_delta_ratio(freq + 1.0 - half, -alpha) * tgamma_delta_ratio(half, alpha);
  return 2.0 * c0 * (1.0 - ratio);
}

MeasureEnergy mu_energy_detail(const DiscreteMeasure& mu, double alpha) {
  const std::vector<double> row = kernel_row(mu.grid(), alpha);
  const std::size_t n = mu.grid().size();
  const auto& w = mu.weights();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j)
    if (w[j] > 0.0) support.push_back(j);

  std::vector<double> rows(support.size(), 0.0);
  detail::parallel_for(support.size(), [&](std::size_t pa) {
    const std::size_t a = support[pa];
    double acc = 0.0;
    for (std::size_t b : support) {
      if (b == a) continue;
      acc += w[b] * row[(b + n - a) % n];
    }
    rows[pa] = w[a] * acc;
  });
  MeasureEnergy out;
  for (double r : rows) out.off_diagonal += r;
  for (std::size_t a : support) out.diagonal += w[a] * w[a] * row[0];
  out.value = out.diagonal + out.off_diagonal;
  return out;
}

double mu_energy(const DiscreteMeasure& mu, double alpha) { return mu_energy_detail(mu, alpha).value; }

double measure_fourier_energy(const FourierCoeffs& coeffs, double alpha) {
  check_dirichlet_alpha(alpha);
  const long m = static_cast<long>(coeffs.truncation());
  double total = 0.0;
  for (long k = 1; k <= m; ++k) {
    total += std::norm(coeffs.at(k)) / std::pow(static_cast<double>(k), 1.0 - alpha);
  }
  return total;
}

}  // namespace circpot

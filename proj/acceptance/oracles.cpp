#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace circpot::oracle {

double energy_weight(long n, double alpha) {
  const double x = static_cast<double>(n);
  auto integrand = [&](double t) {
    // Near 0 the integrand behaves like n^2 t^{1-alpha}.
    if (t < 1e-6) return x * x * std::pow(t, 1.0 - alpha);
    const double s = std::sin(0.5 * x * t);
    return 4.0 * s * s / std::pow(2.0 * std::sin(0.5 * t), 1.0 + alpha);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  // Split at the zeros of sin(nt/2) so the oscillation stays resolved.
  double total = 0.0;
  for (long k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / x;
    const double b = std::min(std::numbers::pi, 2.0 * std::numbers::pi * static_cast<double>(k + 1) / x);
    if (a >= b) break;
    total += ts.integrate(integrand, a, b);
  }
  return total / std::numbers::pi;
}

double uniform_energy(double alpha) {
  const double integral = std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (1.0 - alpha)) / std::tgamma(1.0 - 0.5 * alpha);
  return std::pow(2.0, -alpha) * integral / std::numbers::pi;
}

namespace {

// Gauss-Legendre on [0, b] split into pieces [b 2^{-k-1}, b 2^{-k}]; fine for
// integrands that are only nonsmooth at 0.
template <class F>
double dyadic_gauss(F f, double b) {
  double total = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * b;
    total += boost::math::quadrature::gauss<double, 30>::integrate(f, mid, b);
    b = mid;
  }
  return total;
}

}  // namespace

double cell_average(double alpha, double h) {
  if (alpha == 0.0) {
    auto g = [&](double u) { return (h - u) * std::abs(std::log(2.0 * std::sin(0.5 * u))); };
    return 2.0 * dyadic_gauss(g, h) / (h * h);
  }
  // u = h v^p removes the u^{-alpha} singularity; the v^p left in h - u is
  // handled by the dyadic split.
  const double p = 1.0 / (1.0 - alpha);
  auto g = [&](double v) {
    const double u = h * std::pow(v, p);
    return (h - u) * std::pow(2.0 * std::sin(0.5 * u), -alpha) * h * p * std::pow(v, p - 1.0);
  };
  return 2.0 * dyadic_gauss(g, 1.0) / (h * h);
}

std::vector<std::vector<double>> kernel_matrix(std::size_t n, const std::vector<std::size_t>& cells,
                                               double alpha) {
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double diag = cell_average(alpha, h);
  std::vector<std::vector<double>> k(cells.size(), std::vector<double>(cells.size()));
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a == b) {
        k[a][b] = diag;
        continue;
      }
      const double t = h * (static_cast<double>(cells[a]) - static_cast<double>(cells[b]));
      const double chord = std::abs(2.0 * std::sin(0.5 * t));
      k[a][b] = alpha == 0.0 ? std::abs(std::log(chord)) : std::pow(chord, -alpha);
    }
  }
  return k;
}

namespace {

double quad_form(const std::vector<std::vector<double>>& k, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b) s += w[a] * k[a][b] * w[b];
  return s;
}

void enumerate(const std::vector<std::vector<double>>& k, int m, std::size_t pos, int left,
               std::vector<int>& counts, double& best, std::vector<int>& best_counts) {
  if (pos + 1 == counts.size()) {
    counts[pos] = left;
    std::vector<double> w(counts.size());
    for (std::size_t a = 0; a < w.size(); ++a) w[a] = static_cast<double>(counts[a]) / m;
    const double v = quad_form(k, w);
    if (v < best) {
      best = v;
      best_counts = counts;
    }
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts[pos] = c;
    enumerate(k, m, pos + 1, left - c, counts, best, best_counts);
  }
}

}  // namespace

double lattice_simplex_min(const std::vector<std::vector<double>>& k, int m) {
  const std::size_t d = k.size();
  std::vector<int> counts(d, 0), best_counts(d, 0);
  double best = std::numeric_limits<double>::infinity();
  enumerate(k, m, 0, m, counts, best, best_counts);

  std::vector<double> w(d);
  for (std::size_t a = 0; a < d; ++a) w[a] = static_cast<double>(best_counts[a]) / m;
  for (double step = 1.0 / m; step > 1e-12;) {
    bool improved = false;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        if (a == b || w[a] < step) continue;
        w[a] -= step;
        w[b] += step;
        const double v = quad_form(k, w);
        if (v < best) {
          best = v;
          improved = true;
        } else {
          w[a] += step;
          w[b] -= step;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

double cantor_series_limit(double beta, double s) {
  long double total = 0.0L;
  for (long n = 1; n < 100000; ++n) {
    const long double x = static_cast<long double>(n);
    const long double l = std::pow(std::pow(2.0L, -x) * x, 1.0L / (1.0L - beta));
    const long double term = std::pow(2.0L, -x) * std::pow(l, -static_cast<long double>(s));
    total += term;
    if (term < 1e-22L && n > 10) break;
  }
  return static_cast<double>(total);
}

}  // namespace circpot::oracle

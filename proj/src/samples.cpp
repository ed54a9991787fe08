#include "circpot/samples.hpp"

#include <cmath>
#include <numeric>
#include <unsupported/Eigen/FFT>

#include "circpot/errors.hpp"

namespace circpot {

BoundarySamples::BoundarySamples(CircleGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw ArgumentError("sample count does not match grid size");
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ArgumentError("boundary samples must be finite");
  }
}

BoundarySamples BoundarySamples::constant(const CircleGrid& grid, Complex value) {
  return BoundarySamples(grid, std::vector<Complex>(grid.size(), value));
}

BoundarySamples BoundarySamples::from_real(const CircleGrid& grid, const std::vector<double>& values) {
  return BoundarySamples(grid, std::vector<Complex>(values.begin(), values.end()));
}

BoundarySamples BoundarySamples::scaled(Complex factor) const {
  std::vector<Complex> v(values_);
  for (auto& x : v) x *= factor;
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::shifted(Complex offset) const {
  std::vector<Complex> v(values_);
  for (auto& x : v) x += offset;
  return BoundarySamples(grid_, std::move(v));
}

BoundarySamples BoundarySamples::rotated(long cells) const {
  const auto n = static_cast<long>(values_.size());
  std::vector<Complex> v(values_.size());
  for (long j = 0; j < n; ++j) {
    long k = (j + cells) % n;
    if (k < 0) k += n;
    v[static_cast<std::size_t>(k)] = values_[static_cast<std::size_t>(j)];
  }
  return BoundarySamples(grid_, std::move(v));
}

FourierCoeffs::FourierCoeffs(std::size_t truncation)
    : m_(truncation), coeffs_(2 * truncation + 1, Complex{}) {}

FourierCoeffs::FourierCoeffs(std::size_t truncation, std::vector<Complex> coeffs)
    : m_(truncation), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 2 * m_ + 1) throw ArgumentError("coefficient array must have 2M+1 entries");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ArgumentError("Fourier coefficients must be finite");
  }
}

Complex FourierCoeffs::at(long n) const {
  const long m = static_cast<long>(m_);
  if (n < -m || n > m) return Complex{};
  return coeffs_[static_cast<std::size_t>(n + m)];
}

void FourierCoeffs::set(long n, Complex value) {
  const long m = static_cast<long>(m_);
  if (n < -m || n > m) throw RangeError("frequency outside the truncation range");
  coeffs_[static_cast<std::size_t>(n + m)] = value;
}

DiscreteMeasure::DiscreteMeasure(CircleGrid grid, std::vector<double> weights)
    : grid_(grid), weights_(std::move(weights)) {
  if (weights_.size() != grid_.size()) throw ArgumentError("weight count does not match grid size");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ArgumentError("measure weights must be finite and nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw ArgumentError("measure weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::uniform(const CircleGrid& grid) {
  return DiscreteMeasure(grid, std::vector<double>(grid.size(), 1.0 / static_cast<double>(grid.size())));
}

DiscreteMeasure DiscreteMeasure::uniform_on(const GridSet& set) {
  const std::size_t count = set.count();
  if (count == 0) throw ArgumentError("cannot put a probability measure on an empty set");
  std::vector<double> w(set.grid().size(), 0.0);
  for (std::size_t j : set.indices()) w[j] = 1.0 / static_cast<double>(count);
  return DiscreteMeasure(set.grid(), std::move(w));
}

DiscreteMeasure DiscreteMeasure::rotated(long cells) const {
  const auto n = static_cast<long>(weights_.size());
  std::vector<double> w(weights_.size());
  for (long j = 0; j < n; ++j) {
    long k = (j + cells) % n;
    if (k < 0) k += n;
    w[static_cast<std::size_t>(k)] = weights_[static_cast<std::size_t>(j)];
  }
  return DiscreteMeasure(grid_, std::move(w));
}

namespace {

// Sum_j x_j e^{-i n t_j} for |n| <= M, with t_j = -pi + 2 pi j / N.
FourierCoeffs grid_transform(const std::vector<Complex>& x, std::size_t truncation, double scale) {
  const std::size_t n = x.size();
  if (2 * truncation > n) throw RangeError("truncation M must not exceed N/2");
  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, x);
  FourierCoeffs out(truncation);
  const long m = static_cast<long>(truncation);
  for (long k = -m; k <= m; ++k) {
    const std::size_t idx = static_cast<std::size_t>((k % static_cast<long>(n) + static_cast<long>(n)) %
                                                     static_cast<long>(n));
    // e^{-i k t_j} = (-1)^k e^{-2 pi i k j / N}
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.set(k, sign * scale * spectrum[idx]);
  }
  return out;
}

}  // namespace

FourierCoeffs fourier_coefficients(const BoundarySamples& f, std::size_t truncation) {
  return grid_transform(f.values(), truncation, 1.0 / static_cast<double>(f.size()));
}

FourierCoeffs fourier_coefficients(const BoundarySamples& f) {
  return fourier_coefficients(f, f.size() / 4);
}

FourierCoeffs measure_fourier(const DiscreteMeasure& mu, std::size_t truncation) {
  std::vector<Complex> x(mu.weights().begin(), mu.weights().end());
  return grid_transform(x, truncation, 1.0);
}

}  // namespace circpot

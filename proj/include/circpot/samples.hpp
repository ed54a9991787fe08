#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "circpot/circle.hpp"

namespace circpot {

using Complex = std::complex<double>;

// Complex function values at the points of a CircleGrid.
class BoundarySamples {
 public:
  BoundarySamples(CircleGrid grid, std::vector<Complex> values);
  static BoundarySamples constant(const CircleGrid& grid, Complex value);
  static BoundarySamples from_real(const CircleGrid& grid, const std::vector<double>& values);

  const CircleGrid& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t j) const { return values_[j]; }

  BoundarySamples scaled(Complex factor) const;
  BoundarySamples shifted(Complex offset) const;
  // Shift samples by `cells` positions counterclockwise.
  BoundarySamples rotated(long cells) const;

 private:
  CircleGrid grid_;
  std::vector<Complex> values_;
};

// Truncated Fourier series: coefficients for n in [-M, M].
class FourierCoeffs {
 public:
  explicit FourierCoeffs(std::size_t truncation);
  FourierCoeffs(std::size_t truncation, std::vector<Complex> coeffs);

  std::size_t truncation() const { return m_; }
  Complex at(long n) const;
  void set(long n, Complex value);
  const std::vector<Complex>& raw() const { return coeffs_; }

 private:
  std::size_t m_;
  std::vector<Complex> coeffs_;  // index n + M
};

// Probability weights on grid cells.
class DiscreteMeasure {
 public:
  DiscreteMeasure(CircleGrid grid, std::vector<double> weights);
  static DiscreteMeasure uniform(const CircleGrid& grid);
  static DiscreteMeasure uniform_on(const GridSet& set);

  const CircleGrid& grid() const { return grid_; }
  const std::vector<double>& weights() const { return weights_; }
  DiscreteMeasure rotated(long cells) const;

 private:
  CircleGrid grid_;
  std::vector<double> weights_;
};

// fhat(n) = (1/N) sum_j f(t_j) e^{-i n t_j}, for |n| <= M. M defaults to N/4.
FourierCoeffs fourier_coefficients(const BoundarySamples& f, std::size_t truncation);
FourierCoeffs fourier_coefficients(const BoundarySamples& f);
// muhat(n) = sum_j w_j e^{-i n t_j}.
FourierCoeffs measure_fourier(const DiscreteMeasure& mu, std::size_t truncation);

}  // namespace circpot

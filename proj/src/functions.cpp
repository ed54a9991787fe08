#include "circpot/functions.hpp"

#include <cmath>
#include <random>

#include "circpot/errors.hpp"

namespace circpot {

BoundarySamples monomial(const CircleGrid& grid, long n) {
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    values[j] = std::polar(1.0, static_cast<double>(n) * grid.angle(j));
  return BoundarySamples(grid, std::move(values));
}

BoundarySamples sawtooth(const CircleGrid& grid) { return BoundarySamples::from_real(grid, grid.angles()); }

FourierCoeffs trig_polynomial_coeffs(std::uint64_t seed, int degree) {
  if (degree < 0) throw ArgumentError("degree must be nonnegative");
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws instead of std::uniform_real_distribution, whose output
  // is not pinned down by the standard.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  FourierCoeffs coeffs(static_cast<std::size_t>(degree));
  for (long n = -degree; n <= degree; ++n) {
    const double re = uniform();
    const double im = uniform();
    coeffs.set(n, Complex(re, im) / (1.0 + static_cast<double>(std::abs(n))));
  }
  return coeffs;
}

BoundarySamples synthesize(const CircleGrid& grid, const FourierCoeffs& coeffs) {
  const long m = static_cast<long>(coeffs.truncation());
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.angle(j);
    Complex acc{};
    for (long n = -m; n <= m; ++n) acc += coeffs.at(n) * std::polar(1.0, static_cast<double>(n) * t);
    values[j] = acc;
  }
  return BoundarySamples(grid, std::move(values));
}

BoundarySamples trig_polynomial(const CircleGrid& grid, std::uint64_t seed, int degree) {
  return synthesize(grid, trig_polynomial_coeffs(seed, degree));
}

}  // namespace circpot

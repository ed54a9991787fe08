#pragma once

// Built-in boundary functions for experiments and tests.

#include <cstdint>

#include "circpot/samples.hpp"

namespace circpot {

// e^{i n t}.
BoundarySamples monomial(const CircleGrid& grid, long n);

// f(e^{it}) = t with t in [-pi, pi); jumps at -1.
BoundarySamples sawtooth(const CircleGrid& grid);

// Random trigonometric polynomial sum_{|n| <= degree} c_n e^{int} with
// c_n uniform in the square [-1,1]^2 divided by 1 + |n|. Same seed, same
// coefficients.
BoundarySamples trig_polynomial(const CircleGrid& grid, std::uint64_t seed, int degree);
FourierCoeffs trig_polynomial_coeffs(std::uint64_t seed, int degree);

// Evaluate a truncated Fourier series on the grid.
BoundarySamples synthesize(const CircleGrid& grid, const FourierCoeffs& coeffs);

}  // namespace circpot

#pragma once

// Reference values computed without the library's own kernels, quadrature
// or solvers. Used by the acceptance suite and the unit tests.

#include <cstddef>
#include <vector>

namespace circpot::oracle {

// (1/2pi) int |e^{int} - 1|^2 / |e^{it} - 1|^{1+alpha} dt by tanh-sinh on (0, pi).
double energy_weight(long n, double alpha);

// I_alpha of normalized arclength: (2^{-alpha}/pi) int_0^pi sin^{-alpha} u du,
// through the Beta function.
double uniform_energy(double alpha);

// (2/h^2) int_0^h (h-u) (2 sin(u/2))^{-alpha} du after the substitution
// u = h v^{1/(1-alpha)}, Gauss-Legendre on the smooth result.
double cell_average(double alpha, double h);

// Kernel matrix of the given cells on an n-point grid, built from scratch.
std::vector<std::vector<double>> kernel_matrix(std::size_t n, const std::vector<std::size_t>& cells,
                                               double alpha);

// min w^T K w over the simplex: exhaustive search of the lattice with
// spacing 1/m, then pairwise mass transfers with shrinking step.
double lattice_simplex_min(const std::vector<std::vector<double>>& k, int m);

// sum_{n>=1} 2^{-n} l_n^{-s} with l_n = (2^{-n} n)^{1/(1-beta)}, in long
// double until the terms drop below 1e-22.
double cantor_series_limit(double beta, double s);

}  // namespace circpot::oracle

#pragma once

// Riesz kernels, fractional Dirichlet energies on arcs, the Fourier-weight
// norm and energies of discrete measures.

#include <vector>

#include "circpot/circle.hpp"
#include "circpot/samples.hpp"

namespace circpot {

// k_alpha at chord distance |1 - zeta|: chord^{-alpha} for 0 < alpha < 1 and
// |log chord| for alpha = 0. Throws SingularityError at chord 0.
double kernel_k(double alpha, double chord);

// Mean of k_alpha(2|sin((s-t)/2)|) over a square cell of side h:
// (2/h^2) int_0^h (h - u) k_alpha(2 sin(u/2)) du.
double cell_self_energy(double alpha, double h);

// First row of the circulant kernel matrix on the grid: entry d is k_alpha at
// the chord between cells j and j+d, entry 0 the cell-averaged self energy.
std::vector<double> kernel_row(const CircleGrid& grid, double alpha);

struct DirichletEnergy {
  double value = 0.0;
  // Estimated contribution of the omitted diagonal cells (from |f'|^2).
  double diagonal_estimate = 0.0;
};

// D_{I,J,alpha}(f) by the midpoint rule over cell pairs in I x J with the
// diagonal excluded; each |dz|/2pi factor contributes 1/N. Symmetric in I, J
// bit for bit.
DirichletEnergy dirichlet_energy_on(const BoundarySamples& f, const GridSet& i_cells,
                                    const GridSet& j_cells, double alpha);

// Arc version: both arcs must hold at least 8 grid cells.
double dirichlet_energy_local(const BoundarySamples& f, const Arc& i_arc, const Arc& j_arc, double alpha);
double dirichlet_energy_global(const BoundarySamples& f, double alpha);

// sum_n |c_n|^2 (1 + |n|)^alpha over the stored frequencies.
double fourier_energy(const FourierCoeffs& coeffs, double alpha);

// w_alpha(n) = (1/2pi) int |e^{int} - 1|^2 / |e^{it} - 1|^{1+alpha} dt, so that
// D_alpha(f) = sum_n w_alpha(|n|) |fhat(n)|^2.
double energy_weight(long n, double alpha);

struct MeasureEnergy {
  double value = 0.0;
  double diagonal = 0.0;
  double off_diagonal = 0.0;
};

// I_alpha(mu) = sum_ij w_i w_j K_ij with the cell-averaged diagonal.
MeasureEnergy mu_energy_detail(const DiscreteMeasure& mu, double alpha);
double mu_energy(const DiscreteMeasure& mu, double alpha);

// sum_{n=1}^{M} |muhat(n)|^2 / n^{1-alpha}.
double measure_fourier_energy(const FourierCoeffs& coeffs, double alpha);

namespace testing {
// Fault injection for the self test: scales every kernel_k value.
void set_kernel_fault(double factor);
double kernel_fault();
}  // namespace testing

}  // namespace circpot

#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "circpot/energy.hpp"
#include "circpot/errors.hpp"
#include "circpot/functions.hpp"
#include "oracles.hpp"

using namespace circpot;

namespace {

// Douglas-type value sum_n |n| |a_n|^2 from a plain O(N^2) DFT.
double douglas_oracle(const BoundarySamples& f, long m) {
  const std::size_t n = f.size();
  double total = 0.0;
  for (long k = -m; k <= m; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += f[j] * std::polar(1.0, -static_cast<double>(k) * f.grid().angle(j));
    acc /= static_cast<double>(n);
    total += std::abs(static_cast<double>(k)) * std::norm(acc);
  }
  return total;
}

}  // namespace

TEST_CASE("kernel values") {
  CHECK(kernel_k(0.5, 2.0) == doctest::Approx(std::pow(2.0, -0.5)));
  CHECK(kernel_k(0.0, 1.0) == 0.0);
  CHECK(kernel_k(0.0, 2.0) == doctest::Approx(std::log(2.0)));
  CHECK(kernel_k(0.0, 0.5) == doctest::Approx(std::log(2.0)));  // |log| is not monotone
  CHECK_THROWS_AS(kernel_k(0.5, 0.0), SingularityError);
  CHECK_THROWS_AS(kernel_k(1.0, 1.0), RangeError);
}

TEST_CASE("cell self energy matches the substitution oracle") {
  for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
    for (double h : {kTwoPi / 64, kTwoPi / 4096}) {
      CHECK(cell_self_energy(alpha, h) == doctest::Approx(oracle::cell_average(alpha, h)).epsilon(1e-9));
    }
  }
}

TEST_CASE("constant functions have zero energy") {
  const CircleGrid g(256);
  const BoundarySamples one = BoundarySamples::constant(g, 1.0);
  CHECK(dirichlet_energy_global(one, 0.5) == 0.0);
  CHECK(dirichlet_energy_global(BoundarySamples::constant(g, 5.0), 1.0) == 0.0);
  CHECK(dirichlet_energy_local(one, Arc::centered(0, 1), Arc::centered(2, 1), 0.25) == 0.0);
}

TEST_CASE("monomials at alpha = 1") {
  const CircleGrid g(4096);
  CHECK(dirichlet_energy_global(monomial(g, 1), 1.0) == doctest::Approx(1.0).epsilon(0.01));
  const BoundarySamples f2 = monomial(g, 2);
  const double ref = douglas_oracle(f2, 4);
  CHECK(ref == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dirichlet_energy_global(f2, 1.0) == doctest::Approx(ref).epsilon(0.01));
}

TEST_CASE("energy weights") {
  CHECK(energy_weight(1, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(energy_weight(2, 1.0) == doctest::Approx(2.0).epsilon(1e-10));
  for (double alpha : {0.25, 0.5, 0.9})
    for (long n : {1L, 3L, 10L}) CHECK(energy_weight(n, alpha) == doctest::Approx(oracle::energy_weight(n, alpha)).epsilon(1e-9));
  const CircleGrid g(4096);
  CHECK(dirichlet_energy_global(monomial(g, 1), 0.5) == doctest::Approx(energy_weight(1, 0.5)).epsilon(0.01));
  CHECK_THROWS_AS(energy_weight(0, 0.5), ArgumentError);
}

TEST_CASE("fourier energy") {
  CHECK(fourier_energy(FourierCoeffs(4), 0.5) == 0.0);
  FourierCoeffs c(4);
  c.set(1, 1.0);
  CHECK(fourier_energy(c, 0.5) == doctest::Approx(std::sqrt(2.0)));
  c.set(2, 1.0);
  CHECK(fourier_energy(c, 1.0) == doctest::Approx(5.0));
}

TEST_CASE("partition additivity") {
  const CircleGrid g(1024);
  const BoundarySamples f = trig_polynomial(g, 5, 6);
  const GridSet i = GridSet::interior(g, Arc(Angle(-1.0), Angle(1.5)));
  const GridSet j = GridSet::full(g).minus(i);
  for (double alpha : {0.25, 1.0}) {
    const double whole = dirichlet_energy_global(f, alpha);
    const double parts = dirichlet_energy_on(f, i, i, alpha).value + dirichlet_energy_on(f, j, j, alpha).value +
                         2.0 * dirichlet_energy_on(f, i, j, alpha).value;
    CHECK(parts == doctest::Approx(whole).epsilon(1e-9));
  }
}

TEST_CASE("energy is symmetric in I and J bit for bit") {
  const CircleGrid g(512);
  const BoundarySamples f = trig_polynomial(g, 9, 5);
  const GridSet i = GridSet::interior(g, Arc::centered(0.2, 1.0));
  const GridSet j = GridSet::interior(g, Arc::centered(1.0, 2.0));
  CHECK(dirichlet_energy_on(f, i, j, 0.5).value == dirichlet_energy_on(f, j, i, 0.5).value);
}

TEST_CASE("seminorm properties and set monotonicity") {
  const CircleGrid g(1024);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BoundarySamples f = trig_polynomial(g, seed, 6);
    const double d = dirichlet_energy_global(f, 0.5);
    CHECK(dirichlet_energy_global(f.shifted(Complex(3.0, -1.0)), 0.5) == doctest::Approx(d).epsilon(1e-9));
    CHECK(dirichlet_energy_global(f.scaled(Complex(0.0, 2.0)), 0.5) == doctest::Approx(4.0 * d).epsilon(1e-9));
    const double small = dirichlet_energy_local(f, Arc::centered(0, 0.5), Arc::centered(0.3, 0.6), 0.5);
    const double big = dirichlet_energy_local(f, Arc::centered(0, 1.0), Arc::centered(0.3, 1.2), 0.5);
    CHECK(small <= big);
  }
}

TEST_CASE("quadrature agrees with the weight diagonalization on polynomials") {
  const CircleGrid g(4096);
  for (double alpha : {0.25, 0.5, 1.0}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const FourierCoeffs c = trig_polynomial_coeffs(seed, 8);
      double ref = 0.0;
      for (long n = -8; n <= 8; ++n)
        if (n != 0) ref += energy_weight(std::abs(n), alpha) * std::norm(c.at(n));
      CHECK(dirichlet_energy_global(synthesize(g, c), alpha) == doctest::Approx(ref).epsilon(0.01));
    }
  }
}

TEST_CASE("norm comparability bracket") {
  const CircleGrid g(2048);
  for (double alpha : {0.25, 0.5, 1.0}) {
    double lo = 1e300, hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const BoundarySamples f = trig_polynomial(g, seed, 6);
      const FourierCoeffs c = fourier_coefficients(f);
      double l2 = 0.0;
      for (long n = -static_cast<long>(c.truncation()); n <= static_cast<long>(c.truncation()); ++n) l2 += std::norm(c.at(n));
      const double r = fourier_energy(c, alpha) / (dirichlet_energy_global(f, alpha) + l2);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double k = std::max(hi, 1.0 / lo);
    MESSAGE("alpha " << alpha << ": bracket K = " << k);
    CHECK(k <= 10.0);
  }
}

TEST_CASE("uniform measure energy") {
  const CircleGrid g(4096);
  const DiscreteMeasure u = DiscreteMeasure::uniform(g);
  CHECK(mu_energy(u, 0.5) == doctest::Approx(oracle::uniform_energy(0.5)).epsilon(0.01));
  CHECK(oracle::uniform_energy(0.5) == doctest::Approx(1.180).epsilon(0.001));
  const MeasureEnergy parts = mu_energy_detail(u, 0.5);
  CHECK(parts.value == doctest::Approx(parts.diagonal + parts.off_diagonal));
}

TEST_CASE("measure energy is rotation invariant") {
  const CircleGrid g(512);
  const DiscreteMeasure mu = DiscreteMeasure::uniform_on(GridSet::cover(g, Arc::centered(0.7, 1.1)));
  for (long k : {1L, 37L, 300L}) CHECK(mu_energy(mu.rotated(k), 0.25) == doctest::Approx(mu_energy(mu, 0.25)).epsilon(1e-12));
}

TEST_CASE("local energy needs resolved arcs") {
  const CircleGrid g(64);
  const BoundarySamples f = monomial(g, 1);
  CHECK_THROWS_AS(dirichlet_energy_local(f, Arc::centered(0, 0.5), Arc::centered(0, 2.0), 0.5), ResolutionError);
  CHECK_THROWS_AS(dirichlet_energy_global(f, 0.0), RangeError);
}

TEST_CASE("results do not depend on the thread cap") {
  const CircleGrid g(2048);
  const BoundarySamples f = trig_polynomial(g, 3, 6);
  ::setenv("CIRCLE_POTENTIAL_THREADS", "1", 1);
  const double one = dirichlet_energy_global(f, 0.5);
  ::setenv("CIRCLE_POTENTIAL_THREADS", "4", 1);
  const double four = dirichlet_energy_global(f, 0.5);
  ::unsetenv("CIRCLE_POTENTIAL_THREADS");
  CHECK(one == four);
}

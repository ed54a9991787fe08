#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "circpot/capacity.hpp"
#include "circpot/energy.hpp"
#include "circpot/errors.hpp"
#include "oracles.hpp"

using namespace circpot;

namespace {

GridSet arc_set(const CircleGrid& g, double center, double length) {
  return GridSet::cover(g, Arc::centered(center, length));
}

}  // namespace

TEST_CASE("empty sets have zero capacity") {
  const CircleGrid g(256);
  CHECK(classical_capacity(GridSet::empty(g), 0.5).value == 0.0);
  CHECK(l2_capacity(GridSet::empty(g), 0.5).value == 0.0);
}

TEST_CASE("full circle, classical") {
  const CircleGrid g(4096);
  const CapacityEstimate est = classical_capacity(GridSet::full(g), 0.5);
  CHECK(est.value == doctest::Approx(1.0 / oracle::uniform_energy(0.5)).epsilon(0.02));
  CHECK(est.value == doctest::Approx(0.847).epsilon(0.02));
  CHECK(est.kkt_residual <= 1e-8);
  REQUIRE(est.measure);
  const auto& w = est.measure->weights();
  CHECK(*std::max_element(w.begin(), w.end()) == doctest::Approx(1.0 / 4096).epsilon(1e-6));
}

TEST_CASE("full circle, L2 at alpha = 1") {
  const CircleGrid g(4096);
  const CapacityEstimate est = l2_capacity(GridSet::full(g), 1.0);
  const double kbar = oracle::uniform_energy(0.5);
  CHECK(est.value == doctest::Approx(1.0 / (kbar * kbar)).epsilon(0.03));
  CHECK(est.value == doctest::Approx(0.718).epsilon(0.03));
}

TEST_CASE("half circle is smaller than the full circle") {
  const CircleGrid g(1024);
  const GridSet half = GridSet::cover(g, Arc(Angle(0.0), Angle(kPi)));
  CHECK(classical_capacity(half, 0.5).value < classical_capacity(GridSet::full(g), 0.5).value);
  CHECK(l2_capacity(half, 0.5).value < l2_capacity(GridSet::full(g), 0.5).value);
}

TEST_CASE("monotone on nested arcs") {
  const CircleGrid g(1024);
  for (double alpha : {0.25, 0.5, 0.75}) {
    double prev_c = 0.0, prev_l2 = 0.0;
    for (double len : {0.1, 0.3, 0.8, 1.6, 3.0}) {
      const GridSet e = arc_set(g, 0.4, len);
      const double c = classical_capacity(e, alpha).value;
      const double l2 = l2_capacity(e, alpha).value;
      CHECK(c >= prev_c);
      CHECK(l2 >= prev_l2);
      prev_c = c;
      prev_l2 = l2;
    }
  }
}

TEST_CASE("equilibrium potential satisfies KKT") {
  const CircleGrid g(512);
  const GridSet e = arc_set(g, 0.0, 1.0).unite(arc_set(g, 2.5, 0.4));
  const double alpha = 0.5;
  const CapacityEstimate est = classical_capacity(e, alpha);
  const std::vector<double> row = kernel_row(g, alpha);
  const auto& w = est.measure->weights();
  const double level = est.energy_or_norm;
  const std::size_t n = g.size();
  for (std::size_t a : e.indices()) {
    double pot = 0.0;
    for (std::size_t b = 0; b < n; ++b) pot += row[(b + n - a) % n] * w[b];
    CHECK(pot >= level * (1.0 - 1e-6));
    if (w[a] > 0.0) CHECK(pot == doctest::Approx(level).epsilon(1e-6));
  }
  for (std::size_t b = 0; b < n; ++b)
    if (!e.contains(b)) CHECK(w[b] == 0.0);
}

TEST_CASE("rotation leaves both capacities unchanged") {
  const CircleGrid g(512);
  const GridSet e = arc_set(g, 1.0, 0.9).unite(arc_set(g, -2.0, 0.3));
  const double c = classical_capacity(e, 0.5).value;
  const double l2 = l2_capacity(e, 0.5).value;
  for (long k : {1L, 100L, 311L}) {
    CHECK(classical_capacity(e.rotated(k), 0.5).value == doctest::Approx(c).epsilon(1e-9));
    CHECK(l2_capacity(e.rotated(k), 0.5).value == doctest::Approx(l2).epsilon(1e-9));
  }
}

TEST_CASE("L2 density is feasible") {
  const CircleGrid g(1024);
  for (double alpha : {0.25, 0.5, 1.0}) {
    const CapacityEstimate est = l2_capacity(arc_set(g, -1.0, 0.7), alpha);
    CHECK(est.min_constraint >= 1.0 - 1e-6);
    CHECK(std::all_of(est.density.begin(), est.density.end(), [](double x) { return x >= 0.0; }));
    CHECK(est.kernel_exponent == doctest::Approx(1.0 - 0.5 * alpha));
  }
}

TEST_CASE("small sets match the lattice oracle") {
  const std::size_t n = 64;
  const CircleGrid g(n);
  const std::vector<std::vector<std::size_t>> sets{{5}, {5, 6}, {0, 9, 30}, {10, 11, 12, 13}, {1, 3, 20, 40, 41}, {2, 12, 22, 32, 42, 52}};
  for (double alpha : {0.25, 0.5}) {
    for (const auto& cells : sets) {
      std::vector<std::uint8_t> mask(n, 0);
      for (std::size_t c : cells) mask[c] = 1;
      const double got = classical_capacity(GridSet(g, mask), alpha).value;
      const double ref = 1.0 / oracle::lattice_simplex_min(oracle::kernel_matrix(n, cells, alpha), 24);
      CHECK(got == doctest::Approx(ref).epsilon(0.01));
    }
  }
}

TEST_CASE("step rules agree") {
  const CircleGrid g(512);
  const GridSet e = arc_set(g, 0.3, 1.2).unite(arc_set(g, 2.0, 0.5));
  SolverConfig pg;
  pg.step_rule = StepRule::projected_gradient;
  CHECK(classical_capacity(e, 0.5, pg).value == doctest::Approx(classical_capacity(e, 0.5).value).epsilon(1e-7));
  CHECK(l2_capacity(e, 0.5, pg).value == doctest::Approx(l2_capacity(e, 0.5).value).epsilon(1e-7));
}

TEST_CASE("logarithmic kernel is flagged") {
  const CircleGrid g(256);
  const CapacityEstimate est = classical_capacity(arc_set(g, 0.0, 0.5), 0.0);
  CHECK(est.nonconvex_kernel);
  CHECK(est.value >= 0.0);
  CHECK_FALSE(classical_capacity(arc_set(g, 0.0, 0.5), 0.5).nonconvex_kernel);
}

TEST_CASE("comparability on a quarter arc") {
  const CircleGrid g(1024);
  const ComparabilityReport r = comparability_report(arc_set(g, 0.0, kPi / 4), 0.5);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
  CHECK(r.ratio == doctest::Approx(r.c_l2 / r.c_classical));
  CHECK(r.classical.kernel_exponent == doctest::Approx(0.5));
  const ComparabilityReport fine = comparability_report(arc_set(CircleGrid(2048), 0.0, kPi / 4), 0.5);
  CHECK(std::abs(fine.ratio / r.ratio - 1.0) < 0.10);
}

TEST_CASE("argument checks") {
  const CircleGrid g(64);
  CHECK_THROWS_AS(classical_capacity(GridSet::full(g), 1.0), RangeError);
  CHECK_THROWS_AS(l2_capacity(GridSet::full(g), 0.0), RangeError);
  SolverConfig bad;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(classical_capacity(GridSet::full(g), 0.5, bad), ArgumentError);
  CHECK_THROWS_AS(parse_step_rule("newton"), ArgumentError);
  CHECK(parse_step_rule(to_string(StepRule::projected_gradient)) == StepRule::projected_gradient);
}

TEST_CASE("iteration cap raises a convergence error") {
  const CircleGrid g(1024);
  SolverConfig tight;
  tight.max_iterations = 1;
  tight.tolerance = 1e-15;
  const GridSet e = arc_set(g, 0.0, 2.0).unite(arc_set(g, 2.5, 1.0));
  try {
    classical_capacity(e, 0.5, tight);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& err) {
    CHECK(err.best_weights().size() == e.count());
    CHECK(err.best_objective() > 0.0);
  }
}

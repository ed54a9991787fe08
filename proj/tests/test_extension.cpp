#include <doctest.h>

#include <cmath>

#include "circpot/energy.hpp"
#include "circpot/errors.hpp"
#include "circpot/extension.hpp"
#include "circpot/functions.hpp"

using namespace circpot;

TEST_CASE("setup geometry") {
  const ExtensionSetup s(kPi / 4, 0.5);
  CHECK(s.outer() == doctest::Approx(kPi / 3));
  CHECK(std::abs(s.theta_gamma() - 0.5 * (s.theta() + s.outer())) < 1e-12);
  CHECK(s.theta() < s.theta_gamma());
  CHECK(s.theta_gamma() < s.outer());
  CHECK(s.arc_l().length() == doctest::Approx(s.outer() - s.theta()));
  CHECK(s.arc_i().length() + s.arc_l().length() + s.arc_r().length() == doctest::Approx(s.arc_j().length()));
  CHECK_FALSE(s.arc_l().intersects(s.arc_i()));
  CHECK_FALSE(s.arc_r().intersects(s.arc_i()));
  CHECK(s.c_gamma() == doctest::Approx(s.arc_j().length() / (s.theta_gamma() - s.theta())));
  CHECK_THROWS_AS(ExtensionSetup(kPi / 4, 0.4), RangeError);
  CHECK_THROWS_AS(ExtensionSetup(0.1, 1.0), RangeError);
}

TEST_CASE("cells partition J") {
  const CircleGrid g(1024);
  const ExtensionCells c = extension_cells(g, ExtensionSetup(0.6, 0.5));
  CHECK(c.i.unite(c.l).unite(c.r) == c.j);
  CHECK(c.i.intersect(c.l).empty());
  CHECK(c.i.intersect(c.r).empty());
  CHECK(c.l.intersect(c.r).empty());
}

TEST_CASE("constants extend to constants") {
  const CircleGrid g(1024);
  const ExtensionSetup s(kPi / 4, 0.5);
  const BoundarySamples ft = extend(BoundarySamples::constant(g, 1.0), s);
  const ExtensionCells c = extension_cells(g, s);
  for (std::size_t k : c.j.indices()) CHECK(ft[k] == Complex(1.0));
  for (std::size_t k : GridSet::full(g).minus(c.j).indices()) CHECK(ft[k] == Complex(0.0));
}

TEST_CASE("extension agrees with f on I and follows the reflection formula") {
  const CircleGrid g(2048);
  const ExtensionSetup s(kPi / 4, 0.5);
  const BoundarySamples f = sawtooth(g);  // linear on I, so interpolation is exact
  const BoundarySamples ft = extend(f, s);
  const ExtensionCells c = extension_cells(g, s);
  for (std::size_t k : c.i.indices()) CHECK(ft[k] == f[k]);
  const auto icells = c.i.indices();
  const double hi = g.angle(icells.back());
  for (std::size_t k : c.l.indices()) {
    const double pre = 0.5 * (3.0 * s.theta() - g.angle(k));
    if (pre <= hi) CHECK(ft[k].real() == doctest::Approx(pre).epsilon(1e-12));
  }
  for (std::size_t k : c.r.indices()) {
    const double pre = -0.5 * (3.0 * s.theta() + g.angle(k));
    if (pre >= -hi) CHECK(ft[k].real() == doctest::Approx(pre).epsilon(1e-12));
  }
  // t = pi/3 maps to 5 pi / 24.
  CHECK(0.5 * (3.0 * s.theta() - kPi / 3) == doctest::Approx(5.0 * kPi / 24));
}

TEST_CASE("extension is continuous across the endpoints of I") {
  const CircleGrid g(4096);
  const ExtensionSetup s(kPi / 4, 0.5);
  const BoundarySamples f = trig_polynomial(g, 3, 6);
  const BoundarySamples ft = extend(f, s);
  const ExtensionCells c = extension_cells(g, s);
  const auto l = c.l.indices();
  const auto i = c.i.indices();
  const auto r = c.r.indices();
  const double h = g.cell_width();
  // Neighbouring samples across +theta and -theta differ by O(h).
  CHECK(std::abs(ft[l.front()] - ft[i.back()]) < 50 * h);
  CHECK(std::abs(ft[r.back()] - ft[i.front()]) < 50 * h);
}

TEST_CASE("sawtooth extension ratio") {
  const CircleGrid g(4096);
  const ExtensionRatio r = extension_ratio(sawtooth(g), ExtensionSetup(kPi / 4, 0.5), 0.5);
  MESSAGE("sawtooth ratio " << r.ratio);
  CHECK(r.ratio > 1.0);
  CHECK(r.ratio <= kExtensionRatioCeiling);
}

TEST_CASE("random polynomial extension ratios") {
  const CircleGrid g(2048);
  const ExtensionSetup s(kPi / 4, 0.5);
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 1.0})
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      worst = std::max(worst, extension_ratio(trig_polynomial(g, seed, 6), s, alpha).ratio);
  MESSAGE("max ratio " << worst);
  CHECK(worst <= kExtensionRatioCeiling);
}

TEST_CASE("constant input is degenerate") {
  const CircleGrid g(1024);
  CHECK_THROWS_AS(extension_ratio(BoundarySamples::constant(g, 2.0), ExtensionSetup(0.5, 0.5), 0.5), DegenerateInputError);
}

TEST_CASE("coarse grids are rejected") {
  CHECK_THROWS_AS(extend(monomial(CircleGrid(64), 1), ExtensionSetup(0.3, 0.5)), ResolutionError);
}

TEST_CASE("six terms sum to D_J") {
  const CircleGrid g(2048);
  const ExtensionSetup s(0.7, 0.6);
  for (double alpha : {0.25, 1.0}) {
    const BoundarySamples ft = extend(trig_polynomial(g, 8, 5), s);
    const double direct = dirichlet_energy_on(ft, extension_cells(g, s).j, extension_cells(g, s).j, alpha).value;
    CHECK(six_term_decomposition(ft, s, alpha).sum() == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("bump") {
  const CircleGrid g(4096);
  const ExtensionSetup s(kPi / 4, 0.5);
  const BoundarySamples phi = bump_phi(g, s);
  CHECK(phi[g.cell_of(0.0)].real() == 1.0);
  const double slope = 1.0 / (s.theta_gamma() - s.theta());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double t = g.angle(k);
    const double v = phi[k].real();
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (std::abs(t) < s.theta()) CHECK(v == 1.0);
    if (std::abs(t) >= s.theta_gamma()) CHECK(v == 0.0);
    const std::size_t next = (k + 1) % g.size();
    // phi is linear in the angle, so the slope bound holds in arclength.
    const double dist = arc_distance(t, g.angle(next));
    CHECK(std::abs(phi[next].real() - v) <= s.c_gamma() / s.arc_j().length() * dist * (1.0 + 1e-9) + 1e-15);
  }
  CHECK(s.c_gamma() / s.arc_j().length() == doctest::Approx(slope));
  // Value at theta_gamma itself: linear formula hits zero.
  CHECK(std::max(0.0, 1.0 - (s.theta_gamma() - s.theta()) * slope) == doctest::Approx(0.0));
}

TEST_CASE("test function F") {
  const CircleGrid g(4096);
  const ExtensionSetup s(kPi / 4, 0.5);
  const BoundarySamples ft = extend(sawtooth(g), s);
  const BoundarySamples phi = bump_phi(g, s);
  const TestFunction tf = test_function_f(ft, phi, s);
  CHECK(tf.mean > 0.0);
  double fmax = 0.0;
  for (std::size_t k : extension_cells(g, s).j.indices()) fmax = std::max(fmax, std::abs(ft[k]));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double v = tf.values[k].real();
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + fmax / tf.mean + 1e-12);
    if (std::abs(g.angle(k)) >= s.theta_gamma()) CHECK(v == 0.0);
  }
  // Sawtooth vanishes at t = 0 where phi = 1.
  CHECK(tf.values[g.cell_of(0.0)].real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(test_function_f(BoundarySamples::constant(g, 0.0), phi, s), DegenerateInputError);
}

TEST_CASE("F vanishes where |f~| equals its mean") {
  const CircleGrid g(1024);
  const ExtensionSetup s(0.5, 0.5);
  const BoundarySamples ft = extend(BoundarySamples::constant(g, Complex(0.0, 3.0)), s);
  const TestFunction tf = test_function_f(ft, bump_phi(g, s), s);
  CHECK(tf.mean == doctest::Approx(3.0));
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(tf.values[k].real() == doctest::Approx(0.0));
}

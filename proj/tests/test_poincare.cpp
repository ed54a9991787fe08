#include <doctest.h>

#include <cmath>
#include <vector>

#include "circpot/errors.hpp"
#include "circpot/functions.hpp"
#include "circpot/poincare.hpp"

using namespace circpot;

namespace {

GridSet cells(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t j : idx) mask[j] = 1;
  return GridSet(CircleGrid(n), std::move(mask));
}

// Cell j of an N-grid covers the same ground as cells 2j-1, 2j of the 2N-grid.
GridSet doubled(const GridSet& coarse) {
  const std::size_t n = coarse.grid().size();
  std::vector<std::uint8_t> mask(2 * n, 0);
  for (std::size_t j : coarse.indices()) {
    mask[(2 * j + 2 * n - 1) % (2 * n)] = 1;
    mask[2 * j] = 1;
  }
  return GridSet(CircleGrid(2 * n), std::move(mask));
}

const Arc kArc = Arc::centered(0.0, 1.2);

}  // namespace

TEST_CASE("zero function") {
  const CircleGrid g(1024);
  const PoincareReport r = poincare_check(BoundarySamples::constant(g, 0.0), cells(1024, {512}), kArc, {});
  CHECK(r.lhs == 0.0);
  CHECK(r.ratio == 0.0);
  CHECK(r.cap > 0.0);
  CHECK(r.zero_cells == 1);
}

TEST_CASE("single-cell spike") {
  const CircleGrid g(1024);
  const GridSet e = cells(1024, {g.cell_of(0.0)});
  const BoundarySamples f = spike_function(e, kArc.length() / 8);
  CHECK(f[g.cell_of(0.0)] == Complex(0.0));
  const PoincareReport r = poincare_check(f, e, kArc, {});
  MESSAGE("ratio " << r.ratio);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
  CHECK(r.scale == doctest::Approx(std::pow(kArc.length(), 0.5)));
  CHECK(r.ratio == doctest::Approx(r.lhs * r.cap / (r.scale * r.energy)));
  CHECK(r.cap_kkt_residual <= 1e-8);
}

TEST_CASE("ratio is stable under refinement") {
  const GridSet coarse = cells(1024, {510, 511, 512, 513});
  const double delta = kArc.length() / 8;
  const double r1 = poincare_check(spike_function(coarse, delta), coarse, kArc, {}).ratio;
  const GridSet fine = doubled(coarse);
  const double r2 = poincare_check(spike_function(fine, delta), fine, kArc, {}).ratio;
  MESSAGE("ratios " << r1 << " " << r2);
  CHECK(std::abs(r2 / r1 - 1.0) < 0.15);
}

TEST_CASE("scaling and rotation invariance") {
  const CircleGrid g(1024);
  const GridSet e = cells(1024, {500, 530});
  const BoundarySamples f = spike_function(e, 0.1);
  const PoincareReport base = poincare_check(f, e, kArc, {});
  CHECK(poincare_check(f.scaled(Complex(3.0, -4.0)), e, kArc, {}).ratio == doctest::Approx(base.ratio).epsilon(1e-9));
  const long shift = 200;
  const PoincareReport rot =
      poincare_check(f.rotated(shift), e.rotated(shift), kArc.rotated(g.cell_width() * shift), {});
  CHECK(rot.ratio == doctest::Approx(base.ratio).epsilon(1e-9));
  CHECK(rot.energy == doctest::Approx(base.energy).epsilon(1e-9));
  CHECK(rot.cap == doctest::Approx(base.cap).epsilon(1e-9));
}

TEST_CASE("shrinking E lowers the capacity and the ratio") {
  const GridSet big = cells(1024, {490, 500, 512, 520, 530});
  const GridSet small = cells(1024, {500, 512});
  const BoundarySamples f = spike_function(big, 0.1);  // vanishes on both
  const PoincareReport rb = poincare_check(f, big, kArc, {});
  const PoincareReport rs = poincare_check(f, small, kArc, {});
  CHECK(rs.cap <= rb.cap);
  CHECK(rs.ratio <= rb.ratio);
  CHECK(rs.energy == rb.energy);
}

TEST_CASE("raising beta toward alpha lowers the scale") {
  const GridSet e = cells(1024, {512});
  const BoundarySamples f = spike_function(e, 0.1);
  double prev = 1e300;
  for (double beta : {0.25, 0.5, 0.75, 1.0}) {
    PoincareParams p;
    p.beta = beta;
    const PoincareReport r = poincare_check(f, e, kArc, p);
    CHECK(r.scale == doctest::Approx(std::pow(kArc.length(), 1.0 - beta)));
    CHECK(r.scale <= prev);
    prev = r.scale;
  }
}

TEST_CASE("constant estimate") {
  const CircleGrid g(512);
  std::vector<PoincareCase> family;
  family.push_back({BoundarySamples::constant(g, 0.0), cells(512, {256}), kArc});
  CHECK(constant_estimate(family, {}) == 0.0);

  double prev = 0.0;
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::uint8_t> mask(512, 0);
    for (int m = 0; m < k; ++m) mask[250 + 3 * m] = 1;
    const GridSet e(g, std::move(mask));
    family.push_back({spike_function(e, 0.15), e, kArc});
    const double est = constant_estimate(family, {});
    CHECK(est >= prev);
    prev = est;
  }
  CHECK(prev > 0.0);

  // gamma only changes admissibility; the estimate cannot drop.
  PoincareParams wide;
  wide.gamma = 0.9;
  CHECK(constant_estimate(family, wide) >= prev);
  CHECK_THROWS_AS(constant_estimate(std::span<const PoincareCase>(), {}), ArgumentError);
}

TEST_CASE("precondition errors") {
  const CircleGrid g(1024);
  const GridSet e = cells(1024, {512});
  const BoundarySamples f = spike_function(e, 0.1);
  CHECK_THROWS_AS(poincare_check(f, e, Arc::centered(0.0, 2.0), {}), RangeError);  // > pi/2
  CHECK_THROWS_AS(poincare_check(monomial(g, 1), e, kArc, {}), PreconditionError);
  CHECK_THROWS_AS(poincare_check(f, cells(1024, {10}), kArc, {}), PreconditionError);
  CHECK_THROWS_AS(poincare_check(f, e, Arc::centered(0.0, 0.03), {}), ResolutionError);
  PoincareParams bad;
  bad.beta = 0.9;
  bad.alpha = 0.5;
  CHECK_THROWS_AS(poincare_check(f, e, kArc, bad), RangeError);
  CHECK_THROWS_AS(spike_function(e, 0.0), ArgumentError);
}

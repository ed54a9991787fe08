#include <doctest.h>

#include <cmath>
#include <random>

#include "circpot/circle.hpp"
#include "circpot/errors.hpp"

using namespace circpot;

TEST_CASE("chord distance examples") {
  CHECK(chord_distance(0.0, kPi) == doctest::Approx(2.0));
  CHECK(chord_distance(0.0, 0.0) == 0.0);
  CHECK(chord_distance(0.0, kPi / 3) == doctest::Approx(1.0));
  CHECK(chord_distance(Angle(0.3), Angle(-2.0)) == doctest::Approx(chord_distance(-2.0, 0.3)));
}

TEST_CASE("chord vs arclength on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 2000; ++k) {
    const double s = u(rng), t = u(rng);
    const double arc = arc_distance(s, t);
    const double chord = chord_distance(s, t);
    CHECK(chord <= arc + 1e-15);
    CHECK(arc <= kPi * chord / 2 + 1e-15);
  }
}

TEST_CASE("angle normalization") {
  CHECK(Angle(kPi).radians() == doctest::Approx(-kPi));
  CHECK(Angle(3 * kTwoPi + 0.25).radians() == doctest::Approx(0.25));
  for (double x : {-kPi, -1.0, 0.0, 2.5, kPi - 1e-9}) CHECK(Angle::normalize(Angle::normalize(x)) == Angle::normalize(x));
  CHECK((Angle(3.0) + Angle(1.0)).radians() == doctest::Approx(4.0 - kTwoPi));
  CHECK((Angle(-3.0) - Angle(1.0)).radians() == doctest::Approx(kTwoPi - 4.0));
}

TEST_CASE("arc containment is open") {
  const Arc a(Angle(-kPi / 4), Angle(kPi / 4));
  CHECK(arc_contains(a, Angle(0.0)));
  CHECK_FALSE(arc_contains(a, Angle(kPi / 4)));
  CHECK_FALSE(arc_contains(a, Angle(-kPi / 4)));
  const Arc cut(Angle(3 * kPi / 4), Angle(-3 * kPi / 4));
  CHECK(cut.length() == doctest::Approx(kPi / 2));
  CHECK(arc_contains(cut, Angle(kPi)));
  CHECK_FALSE(arc_contains(cut, Angle(0.0)));
}

TEST_CASE("arcs reject degenerate lengths") {
  CHECK_THROWS_AS(Arc(Angle(1.0), Angle(1.0)), ArgumentError);
  CHECK_THROWS_AS(Arc::from_length(Angle(0.0), kTwoPi), ArgumentError);
  CHECK_THROWS_AS(Arc::centered(0.0, -0.1), ArgumentError);
}

TEST_CASE("rotation keeps lengths and disjointness") {
  std::vector<Arc> arcs{Arc::centered(0.0, 0.5), Arc::centered(1.0, 0.4), Arc::centered(3.0, 0.2)};
  const ArcFamily fam = ArcFamily::disjoint(arcs);
  for (double delta : {0.1, 1.7, -2.9, 3.1}) {
    std::vector<Arc> rotated;
    for (const Arc& a : arcs) rotated.push_back(a.rotated(delta));
    const ArcFamily r(rotated);
    CHECK(r.pairwise_disjoint());
    CHECK(r.total_length() == doctest::Approx(fam.total_length()));
    for (std::size_t k = 0; k < arcs.size(); ++k) CHECK(rotated[k].length() == doctest::Approx(arcs[k].length()));
  }
}

TEST_CASE("arc families flag overlaps") {
  CHECK_FALSE(ArcFamily({Arc::centered(0.0, 1.0), Arc::centered(0.4, 1.0)}).pairwise_disjoint());
  CHECK(ArcFamily({Arc::centered(0.0, 1.0), Arc::centered(1.0, 1.0)}).pairwise_disjoint());  // touching
  CHECK_FALSE(ArcFamily({Arc::centered(3.0, 1.0), Arc::centered(-3.0, 1.0)}).pairwise_disjoint());  // across the cut
  CHECK_THROWS_AS(ArcFamily::disjoint({Arc::centered(0.0, 1.0), Arc::centered(0.2, 0.1)}), ArgumentError);
  CHECK(ArcFamily::full_circle().total_length() == doctest::Approx(kTwoPi));
}

namespace {

// Every input arc lies in the 3-fold dilation of some output arc, and the
// output is disjoint.
void check_vitali(const ArcFamily& in, const ArcFamily& out) {
  CHECK(out.pairwise_disjoint());
  for (const Arc& a : in.arcs()) {
    bool covered = false;
    for (const Arc& b : out.arcs()) covered = covered || contained_in_dilation(a, b, 3.0);
    CHECK(covered);
  }
}

}  // namespace

TEST_CASE("vitali subfamily examples") {
  const ArcFamily disjoint({Arc::centered(0.0, 0.3), Arc::centered(2.0, 0.5)});
  const ArcFamily same = vitali_disjoint_subfamily(disjoint);
  REQUIRE(same.size() == 2);
  CHECK(same.total_length() == doctest::Approx(disjoint.total_length()));

  const ArcFamily twins({Arc::centered(1.0, 0.3), Arc::centered(1.0, 0.3)});
  CHECK(vitali_disjoint_subfamily(twins).size() == 1);

  const ArcFamily three({Arc::centered(0.0, 0.4), Arc::centered(0.3, 0.3), Arc::centered(-0.25, 0.2)});
  const ArcFamily one = vitali_disjoint_subfamily(three);
  REQUIRE(one.size() == 1);
  CHECK(one.arcs()[0].length() == doctest::Approx(0.4));
  check_vitali(three, one);

  CHECK(vitali_disjoint_subfamily(ArcFamily()).size() == 0);
}

TEST_CASE("vitali covering property on random families") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> center(-kPi, kPi), len(0.05, 1.2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Arc> arcs;
    for (int k = 0; k < 12; ++k) arcs.push_back(Arc::centered(center(rng), len(rng)));
    const ArcFamily fam(arcs);
    check_vitali(fam, vitali_disjoint_subfamily(fam));
  }
}

TEST_CASE("grid geometry") {
  const CircleGrid g(64);
  CHECK(g.angle(0) == doctest::Approx(-kPi));
  CHECK(g.cell_width() * 64 == doctest::Approx(kTwoPi));
  const auto a = g.angles();
  for (std::size_t k = 1; k < a.size(); ++k) CHECK(a[k] > a[k - 1]);
  CHECK(g.cell_of(g.angle(17)) == 17);
  CHECK(g.cell_of(kPi - 1e-9) == 0);  // last half-cell wraps to cell 0
  CHECK_THROWS_AS(CircleGrid(1), ArgumentError);
}

TEST_CASE("grid sets") {
  const CircleGrid g(64);
  const double h = g.cell_width();
  // Arc with endpoints on grid points: open semantics drop them.
  const Arc a(Angle(g.angle(10)), Angle(g.angle(20)));
  const GridSet in = GridSet::interior(g, a);
  CHECK(in.count() == 9);
  CHECK_FALSE(in.contains(10));
  CHECK_FALSE(in.contains(20));
  // Cover: every cell meeting the closed arc with positive length.
  const GridSet cov = GridSet::cover(g, a);
  CHECK(cov.count() == 11);
  CHECK(in.is_subset_of(cov));
  CHECK(cov.measure() == doctest::Approx(11 * h));

  const GridSet wrap = GridSet::interior(g, Arc::centered(kPi, 0.5));
  CHECK(wrap.contains(0));
  CHECK(wrap.rotated(3).count() == wrap.count());
  CHECK(wrap.rotated(64) == wrap);
  CHECK(GridSet::full(g).minus(wrap).unite(wrap) == GridSet::full(g));
  CHECK(GridSet::full(g).intersect(wrap) == wrap);
  CHECK(GridSet::empty(g).empty());
}

#include "circpot/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "circpot/errors.hpp"

namespace circpot {

double Angle::normalize(double radians) {
  if (radians >= -kPi && radians < kPi) return radians;
  double r = std::fmod(radians + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;
  if (r >= kPi) r -= kTwoPi;
  return r;
}

double ccw_gap(Angle from, Angle to) {
  double d = to.radians() - from.radians();
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d -= kTwoPi;
  return d;
}

double chord_distance(double s, double t) { return 2.0 * std::abs(std::sin(0.5 * (s - t))); }

double chord_distance(Angle s, Angle t) { return chord_distance(s.radians(), t.radians()); }

double arc_distance(double s, double t) {
  const double d = ccw_gap(Angle(s), Angle(t));
  return std::min(d, kTwoPi - d);
}

Arc::Arc(Angle start, double length, int) : start_(start), length_(length) {
  if (!(length_ > kAngleTol) || !(length_ < kTwoPi - kAngleTol)) {
    throw ArgumentError("arc length must lie in (0, 2pi)");
  }
}

Arc::Arc(Angle start, Angle end) : Arc(start, ccw_gap(start, end), 0) {}

Arc Arc::from_length(Angle start, double length) { return Arc(start, length, 0); }

Arc Arc::centered(double center, double length) {
  return Arc(Angle(center - 0.5 * length), length, 0);
}

bool Arc::contains(Angle t) const {
  const double d = ccw_gap(start_, t);
  return d > kAngleTol && d < length_ - kAngleTol;
}

bool Arc::intersects(const Arc& other) const {
  if (ccw_gap(start_, other.start_) < length_ - kAngleTol) return true;
  return ccw_gap(other.start_, start_) < other.length_ - kAngleTol;
}

bool arc_contains(const Arc& arc, Angle t) { return arc.contains(t); }

bool contained_in_dilation(const Arc& inner, const Arc& outer, double factor) {
  const double dilated = factor * outer.length();
  if (dilated >= kTwoPi - kAngleTol) return true;
  const Angle dilated_start(outer.midpoint().radians() - 0.5 * dilated);
  double offset = ccw_gap(dilated_start, inner.start());
  if (offset > kTwoPi - kAngleTol) offset -= kTwoPi;
  return offset >= -kAngleTol && offset + inner.length() <= dilated + kAngleTol;
}

namespace {

bool cyclic_disjoint(const std::vector<Arc>& arcs) {
  if (arcs.size() < 2) return true;
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return arcs[a].start().radians() < arcs[b].start().radians();
  });
  // If some pair overlaps, then some arc overlaps its cyclic successor.
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Arc& a = arcs[order[k]];
    const Arc& b = arcs[order[(k + 1) % order.size()]];
    if (a.intersects(b)) return false;
  }
  return true;
}

}  // namespace

ArcFamily::ArcFamily(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  disjoint_ = cyclic_disjoint(arcs_);
}

ArcFamily ArcFamily::full_circle() {
  ArcFamily family;
  family.full_ = true;
  return family;
}

ArcFamily ArcFamily::disjoint(std::vector<Arc> arcs) {
  ArcFamily family(std::move(arcs));
  if (!family.pairwise_disjoint()) throw ArgumentError("arc family is not pairwise disjoint");
  return family;
}

double ArcFamily::total_length() const {
  if (full_) return kTwoPi;
  double total = 0.0;
  for (const Arc& a : arcs_) total += a.length();
  return total;
}

bool ArcFamily::contains(Angle t) const {
  if (full_) return true;
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.contains(t); });
}

ArcFamily vitali_disjoint_subfamily(const ArcFamily& family) {
  if (family.is_full_circle()) return family;
  const auto& arcs = family.arcs();
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double la = arcs[a].length();
    const double lb = arcs[b].length();
    if (std::abs(la - lb) > kAngleTol) return la > lb;
    return arcs[a].start().radians() < arcs[b].start().radians();
  });
  std::vector<Arc> kept;
  for (std::size_t idx : order) {
    const Arc& candidate = arcs[idx];
    const bool clash = std::any_of(kept.begin(), kept.end(),
                                   [&](const Arc& k) { return k.intersects(candidate); });
    if (!clash) kept.push_back(candidate);
  }
  return ArcFamily(std::move(kept));
}

CircleGrid::CircleGrid(std::size_t n_points) : n_(n_points) {
  if (n_ < 2) throw ArgumentError("grid needs at least two points");
}

std::vector<double> CircleGrid::angles() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = angle(j);
  return out;
}

std::size_t CircleGrid::cell_of(double t) const {
  const double h = cell_width();
  const double pos = (Angle::normalize(t) + kPi + 0.5 * h) / h;
  auto j = static_cast<long long>(std::floor(pos));
  const auto n = static_cast<long long>(n_);
  j %= n;
  if (j < 0) j += n;
  return static_cast<std::size_t>(j);
}

namespace {

// Length of the overlap of circular intervals [a, a+la] and [b, b+lb]
// (the larger of the two possible pieces).
double circular_overlap(Angle a, double la, Angle b, double lb) {
  const double d = ccw_gap(a, b);
  const double first = std::min(la, d + lb) - d;
  const double d2 = ccw_gap(b, a);
  const double second = std::min(lb, d2 + la) - d2;
  return std::max({first, second, 0.0});
}

template <class Visit>
void walk_cells(const CircleGrid& grid, const Arc& arc, Visit&& visit) {
  const double h = grid.cell_width();
  const auto n = static_cast<long long>(grid.size());
  const auto first = static_cast<long long>(grid.cell_of(arc.start().radians())) - 1;
  const auto steps = std::min<long long>(n, static_cast<long long>(std::ceil(arc.length() / h)) + 3);
  for (long long k = 0; k < steps; ++k) {
    long long j = (first + k) % n;
    if (j < 0) j += n;
    visit(static_cast<std::size_t>(j));
  }
}

}  // namespace

GridSet::GridSet(CircleGrid grid, std::vector<std::uint8_t> mask)
    : grid_(grid), mask_(std::move(mask)) {
  if (mask_.size() != grid_.size()) throw ArgumentError("grid mask length does not match grid size");
  for (auto& m : mask_) m = m ? 1 : 0;
}

GridSet GridSet::empty(const CircleGrid& grid) {
  return GridSet(grid, std::vector<std::uint8_t>(grid.size(), 0));
}

GridSet GridSet::full(const CircleGrid& grid) {
  return GridSet(grid, std::vector<std::uint8_t>(grid.size(), 1));
}

GridSet GridSet::interior(const CircleGrid& grid, const Arc& arc) {
  std::vector<std::uint8_t> mask(grid.size(), 0);
  walk_cells(grid, arc, [&](std::size_t j) {
    if (arc.contains(Angle(grid.angle(j)))) mask[j] = 1;
  });
  return GridSet(grid, std::move(mask));
}

GridSet GridSet::interior(const CircleGrid& grid, const ArcFamily& family) {
  if (family.is_full_circle()) return full(grid);
  std::vector<std::uint8_t> mask(grid.size(), 0);
  for (const Arc& arc : family.arcs()) {
    walk_cells(grid, arc, [&](std::size_t j) {
      if (arc.contains(Angle(grid.angle(j)))) mask[j] = 1;
    });
  }
  return GridSet(grid, std::move(mask));
}

GridSet GridSet::cover(const CircleGrid& grid, const Arc& arc) {
  return cover(grid, ArcFamily(std::vector<Arc>{arc}));
}

GridSet GridSet::cover(const CircleGrid& grid, const ArcFamily& family) {
  if (family.is_full_circle()) return full(grid);
  const double h = grid.cell_width();
  std::vector<std::uint8_t> mask(grid.size(), 0);
  for (const Arc& arc : family.arcs()) {
    walk_cells(grid, arc, [&](std::size_t j) {
      const Angle cell_start(grid.angle(j) - 0.5 * h);
      if (circular_overlap(cell_start, h, arc.start(), arc.length()) > kAngleTol) mask[j] = 1;
    });
  }
  return GridSet(grid, std::move(mask));
}

std::size_t GridSet::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> GridSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < mask_.size(); ++j)
    if (mask_[j]) out.push_back(j);
  return out;
}

void GridSet::check_same_grid(const GridSet& other) const {
  if (!(grid_ == other.grid_)) throw ArgumentError("grid sets live on different grids");
}

GridSet GridSet::intersect(const GridSet& other) const {
  check_same_grid(other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = mask_[j] & other.mask_[j];
  return GridSet(grid_, std::move(m));
}

GridSet GridSet::unite(const GridSet& other) const {
  check_same_grid(other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = mask_[j] | other.mask_[j];
  return GridSet(grid_, std::move(m));
}

GridSet GridSet::minus(const GridSet& other) const {
  check_same_grid(other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = mask_[j] & (other.mask_[j] ^ 1);
  return GridSet(grid_, std::move(m));
}

GridSet GridSet::rotated(long cells) const {
  const auto n = static_cast<long>(mask_.size());
  std::vector<std::uint8_t> m(mask_.size(), 0);
  for (long j = 0; j < n; ++j) {
    long k = (j + cells) % n;
    if (k < 0) k += n;
    m[static_cast<std::size_t>(k)] = mask_[static_cast<std::size_t>(j)];
  }
  return GridSet(grid_, std::move(m));
}

bool GridSet::is_subset_of(const GridSet& other) const {
  check_same_grid(other);
  for (std::size_t j = 0; j < mask_.size(); ++j)
    if (mask_[j] && !other.mask_[j]) return false;
  return true;
}

}  // namespace circpot

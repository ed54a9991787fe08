#pragma once

// Geometry of the unit circle: angles, open arcs, arc families, uniform
// grids and grid masks.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace circpot {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Absolute tolerance for angle comparisons.
inline constexpr double kAngleTol = 1e-12;

// An angle with canonical representative in [-pi, pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : radians_(normalize(radians)) {}

  double radians() const { return radians_; }

  Angle operator+(Angle other) const { return Angle(radians_ + other.radians_); }
  Angle operator-(Angle other) const { return Angle(radians_ - other.radians_); }

  static double normalize(double radians);

 private:
  double radians_ = 0.0;
};

// Counterclockwise gap from `from` to `to`, in [0, 2pi).
double ccw_gap(Angle from, Angle to);

// |e^{is} - e^{it}| = 2|sin((s-t)/2)|.
double chord_distance(Angle s, Angle t);
double chord_distance(double s, double t);

// Shortest arclength between two angles, in [0, pi].
double arc_distance(double s, double t);

// Open arc running counterclockwise from start to end. Never the full circle.
class Arc {
 public:
  Arc(Angle start, Angle end);
  static Arc from_length(Angle start, double length);
  static Arc centered(double center, double length);

  Angle start() const { return start_; }
  Angle end() const { return Angle(start_.radians() + length_); }
  double length() const { return length_; }
  Angle midpoint() const { return Angle(start_.radians() + 0.5 * length_); }

  bool contains(Angle t) const;
  // True when the open arcs share a piece of positive length.
  bool intersects(const Arc& other) const;
  Arc rotated(double delta) const { return from_length(Angle(start_.radians() + delta), length_); }

 private:
  Arc(Angle start, double length, int);
  Angle start_;
  double length_;
};

bool arc_contains(const Arc& arc, Angle t);

// inner is contained in the closed `factor`-fold dilation of outer (same
// midpoint, length multiplied, capped at the full circle).
bool contained_in_dilation(const Arc& inner, const Arc& outer, double factor);

// Finite list of arcs, with a validated pairwise-disjointness flag.
class ArcFamily {
 public:
  ArcFamily() = default;
  explicit ArcFamily(std::vector<Arc> arcs);
  static ArcFamily full_circle();
  // Throws ArgumentError unless the arcs are pairwise disjoint.
  static ArcFamily disjoint(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty() && !full_; }
  bool pairwise_disjoint() const { return disjoint_; }
  bool is_full_circle() const { return full_; }
  double total_length() const;
  bool contains(Angle t) const;

 private:
  std::vector<Arc> arcs_;
  bool disjoint_ = true;
  bool full_ = false;
};

// Greedy Vitali selection: arcs by decreasing length (ties by smaller start
// angle), keeping each arc disjoint from those already kept. Every input arc
// lies in the 3-fold dilation of some kept arc.
ArcFamily vitali_disjoint_subfamily(const ArcFamily& family);

// N points t_j = -pi + 2 pi j / N, each the center of a cell of width 2pi/N.
class CircleGrid {
 public:
  explicit CircleGrid(std::size_t n_points);

  std::size_t size() const { return n_; }
  double cell_width() const { return kTwoPi / static_cast<double>(n_); }
  double angle(std::size_t j) const {
    return -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(n_);
  }
  std::vector<double> angles() const;
  // Index of the cell containing angle t (half-open cells).
  std::size_t cell_of(double t) const;

  bool operator==(const CircleGrid& other) const { return n_ == other.n_; }

 private:
  std::size_t n_;
};

// Boolean mask over the cells of a grid; the discrete stand-in for a set.
class GridSet {
 public:
  GridSet(CircleGrid grid, std::vector<std::uint8_t> mask);

  static GridSet empty(const CircleGrid& grid);
  static GridSet full(const CircleGrid& grid);
  // Cells whose center lies strictly inside one of the arcs.
  static GridSet interior(const CircleGrid& grid, const Arc& arc);
  static GridSet interior(const CircleGrid& grid, const ArcFamily& family);
  // Cells meeting one of the closed arcs in a piece of positive length.
  static GridSet cover(const CircleGrid& grid, const Arc& arc);
  static GridSet cover(const CircleGrid& grid, const ArcFamily& family);

  const CircleGrid& grid() const { return grid_; }
  std::span<const std::uint8_t> mask() const { return mask_; }
  bool contains(std::size_t j) const { return mask_[j] != 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  double measure() const { return static_cast<double>(count()) * grid_.cell_width(); }
  std::vector<std::size_t> indices() const;

  GridSet intersect(const GridSet& other) const;
  GridSet unite(const GridSet& other) const;
  GridSet minus(const GridSet& other) const;
  // Shift the mask by `cells` positions counterclockwise.
  GridSet rotated(long cells) const;
  bool is_subset_of(const GridSet& other) const;

  bool operator==(const GridSet& other) const {
    return grid_ == other.grid_ && mask_ == other.mask_;
  }

 private:
  void check_same_grid(const GridSet& other) const;
  CircleGrid grid_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace circpot

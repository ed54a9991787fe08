#pragma once

// Generalized Cantor sets, the series criteria for uniqueness sets, and the
// trend rule used to call a finite run of partial sums divergent.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circpot/capacity.hpp"
#include "circpot/circle.hpp"

namespace circpot {

// Length sequence l_n of a generalized Cantor set.
class LengthRule {
 public:
  enum class Kind { power, ratio, table };

  // l_n = (2^{-n} n)^{1/(1-beta)}, n >= 1.
  static LengthRule power(double beta);
  // l_n = l0 r^n, n >= 0.
  static LengthRule ratio(double l0, double r);
  // l_n = lengths[n], n >= 0.
  static LengthRule table(std::vector<double> lengths);

  Kind kind() const { return kind_; }
  long first_index() const { return kind_ == Kind::power ? 1 : 0; }
  // Largest index the rule defines, if finite.
  std::optional<long> last_index() const;
  double log_length(long n) const;
  double length(long n) const;
  std::string describe() const;

  double beta() const { return beta_; }
  double l0() const { return l0_; }
  double r() const { return r_; }
  const std::vector<double>& lengths() const { return table_; }

 private:
  LengthRule() = default;
  Kind kind_ = Kind::ratio;
  double beta_ = 0.0;
  double l0_ = 1.0;
  double r_ = 0.5;
  std::vector<double> table_;
};

// Stage k of the construction uses l_{first + offset + k}. Stage 0 is one
// interval centered in the host; the host is the full circle by default.
struct CantorSpec {
  LengthRule rule = LengthRule::ratio(1.0, 1.0 / 3.0);
  int depth = 0;
  long offset = 0;
  double host_start = -kPi;
  double host_length = kTwoPi;
  // Rescale every length so that the stage-0 interval fills the host.
  bool fit_host = false;

  static CantorSpec in_arc(LengthRule rule, int depth, const Arc& host, bool fit_host);
  long stage_index(int k) const { return rule.first_index() + offset + k; }
};

inline constexpr int kMaxCantorDepth = 24;

// Validated interval lengths for stages 0..depth.
std::vector<double> cantor_stage_lengths(const CantorSpec& spec);
// The 2^depth intervals of the last stage, as pairwise disjoint arcs.
// Throws ConstructionError (stage = index n of the offending l_n) when
// l_{n+1} > l_n / 2 or l_0 exceeds the host.
ArcFamily cantor_build(const CantorSpec& spec);
// Smallest offset for which the construction is valid up to `depth`.
long admissible_offset(const LengthRule& rule, int depth);

enum class Trend { diverges_minus_inf, diverges_plus_inf, converges, inconclusive };
std::string to_string(Trend trend);

struct TrendFit {
  std::string model = "none";  // constant, geometric, power_decay, log, loglog, power
  double coefficient = 0.0;
  double intercept = 0.0;
  double exponent = 0.0;
  double r_squared = 0.0;
  double t_statistic = 0.0;
};

struct SeriesDiagnostic {
  std::vector<double> terms;
  std::vector<double> partial_sums;  // S_1 .. S_N
  std::vector<std::size_t> checkpoints;  // 1-based term counts used by the fit
  Trend trend = Trend::inconclusive;
  TrendFit fit;
  // Tail-corrected limit, when the trend is converges.
  std::optional<double> limit;
  // Set when a term is -inf because a computed capacity vanished.
  bool zero_capacity = false;
};

// Decision rule, applied to the last half of 64 log-spaced checkpoints:
//  - converges when the partial sums there agree to 1e-12 (relative), or the
//    terms decay geometrically (ratio <= 0.95) or like n^{-q}, q >= 1.5, with
//    R^2 >= 0.99; the limit adds the fitted tail;
//  - otherwise S_N ~ a + c g(N) is fitted for g in {log N, log log N, N^p,
//    0.05 <= p <= 1}; the best R^2 wins, and divergence (sign of c) is called
//    when R^2 >= 0.99 and |c| is at least 10 standard errors;
//  - inconclusive otherwise.
SeriesDiagnostic diagnose_series(std::vector<double> terms);

// sum_{n=1}^{N} 2^{-n} l_n^{-s}, indexed by the rule (offset and host ignored).
SeriesDiagnostic cantor_capacity_series(const LengthRule& rule, double s, std::size_t n_terms);

// sum |I_n| log |I_n| over the first N arcs by decreasing length.
SeriesDiagnostic carleson_sum(const ArcFamily& family, std::size_t n_terms);
// Same sum from the lengths alone; lengths below the angle tolerance are fine.
SeriesDiagnostic carleson_sum(std::vector<double> lengths, std::size_t n_terms);

// Arcs (1/log(n+1), 1/log n) for n = 2..n_max.
ArcFamily paper_example_arcs(std::size_t n_max);
// Lengths l0 r^n, n = 1..count, of arcs laid end to end.
std::vector<double> geometric_lengths(double l0, double ratio, std::size_t count);

struct UniquenessDiagnostic {
  SeriesDiagnostic series;
  std::vector<double> lengths;
  std::vector<double> capacities;  // C_{1-beta}(E cap I_n)
  std::vector<double> logs;        // log(|I_n|^{1+alpha-beta} / C)
  // Least-squares slope of log C against log |I_n| (NaN with < 2 usable terms).
  double capacity_exponent = 0.0;
};

// sum_n |I_n| log(|I_n|^{1+alpha-beta} / C_{1-beta}(E cap I_n)) over the
// first N arcs, E cap I_n given as grid sets.
UniquenessDiagnostic uniqueness_series(const std::vector<GridSet>& parts, const ArcFamily& arcs,
                                       double alpha, double beta, const SolverConfig& cfg,
                                       std::size_t n_terms);

// A scaled copy of the Cantor construction in each arc, as grid covers.
std::vector<GridSet> cantor_in_arcs(const LengthRule& rule, int depth, const ArcFamily& arcs,
                                    const CircleGrid& grid);

}  // namespace circpot

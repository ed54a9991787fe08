#include "circpot/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "circpot/errors.hpp"

namespace circpot {

LengthRule LengthRule::power(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ArgumentError("power rule needs beta in (0, 1)");
  LengthRule rule;
  rule.kind_ = Kind::power;
  rule.beta_ = beta;
  return rule;
}

LengthRule LengthRule::ratio(double l0, double r) {
  if (!(l0 > 0.0 && std::isfinite(l0))) throw ArgumentError("ratio rule needs l0 > 0");
  if (!(r > 0.0 && r < 1.0)) throw ArgumentError("ratio rule needs r in (0, 1)");
  LengthRule rule;
  rule.kind_ = Kind::ratio;
  rule.l0_ = l0;
  rule.r_ = r;
  return rule;
}

LengthRule LengthRule::table(std::vector<double> lengths) {
  if (lengths.empty()) throw ArgumentError("length table is empty");
  for (double l : lengths)
    if (!(l > 0.0 && std::isfinite(l))) throw ArgumentError("length table entries must be positive");
  LengthRule rule;
  rule.kind_ = Kind::table;
  rule.table_ = std::move(lengths);
  return rule;
}

std::optional<long> LengthRule::last_index() const {
  if (kind_ == Kind::table) return static_cast<long>(table_.size()) - 1;
  return std::nullopt;
}

double LengthRule::log_length(long n) const {
  if (n < first_index()) throw ArgumentError("length index below the rule's first index");
  switch (kind_) {
    case Kind::power: {
      const double x = static_cast<double>(n);
      return (std::log(x) - x * std::numbers::ln2) / (1.0 - beta_);
    }
    case Kind::ratio:
      return std::log(l0_) + static_cast<double>(n) * std::log(r_);
    case Kind::table:
      if (n > *last_index()) throw ArgumentError("length table too short for index " + std::to_string(n));
      return std::log(table_[static_cast<std::size_t>(n)]);
  }
  return 0.0;
}

double LengthRule::length(long n) const { return std::exp(log_length(n)); }

std::string LengthRule::describe() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case Kind::power: out << "power:beta=" << beta_; break;
    case Kind::ratio: out << "ratio:l0=" << l0_ << ",r=" << r_; break;
    case Kind::table: out << "table:" << table_.size() << " entries"; break;
  }
  return out.str();
}

CantorSpec CantorSpec::in_arc(LengthRule rule, int depth, const Arc& host, bool fit_host) {
  CantorSpec spec;
  spec.rule = std::move(rule);
  spec.depth = depth;
  spec.host_start = host.start().radians();
  spec.host_length = host.length();
  spec.fit_host = fit_host;
  return spec;
}

std::vector<double> cantor_stage_lengths(const CantorSpec& spec) {
  if (spec.depth < 0 || spec.depth > kMaxCantorDepth)
    throw ArgumentError("Cantor depth must lie in [0, " + std::to_string(kMaxCantorDepth) + "]");
  if (spec.offset < 0) throw ArgumentError("Cantor offset must be nonnegative");
  if (!(spec.host_length > 0.0 && spec.host_length <= kTwoPi + kAngleTol))
    throw ArgumentError("host length must lie in (0, 2pi]");
  if (auto last = spec.rule.last_index(); last && spec.stage_index(spec.depth) > *last)
    throw ArgumentError("length table too short for the requested depth");

  std::vector<double> lengths(static_cast<std::size_t>(spec.depth) + 1);
  double scale = 1.0;
  if (spec.fit_host) {
    if (spec.host_length >= kTwoPi - kAngleTol) throw ArgumentError("cannot fit a Cantor set to the full circle");
    scale = spec.host_length / spec.rule.length(spec.stage_index(0));
  }
  for (int k = 0; k <= spec.depth; ++k)
    lengths[static_cast<std::size_t>(k)] = scale * spec.rule.length(spec.stage_index(k));

  const double tol = 1e-12;
  if (lengths[0] > spec.host_length * (1.0 + tol) || lengths[0] >= kTwoPi - kAngleTol)
    throw ConstructionError("l_" + std::to_string(spec.stage_index(0)) + " exceeds the host length",
                            static_cast<int>(spec.stage_index(0)));
  for (int k = 0; k < spec.depth; ++k) {
    const double cur = lengths[static_cast<std::size_t>(k)];
    const double next = lengths[static_cast<std::size_t>(k) + 1];
    if (next > 0.5 * cur * (1.0 + tol)) {
      const long n = spec.stage_index(k + 1);
      throw ConstructionError("l_" + std::to_string(n) + " > l_" + std::to_string(n - 1) + " / 2",
                              static_cast<int>(n));
    }
    if (next <= kAngleTol) throw ConstructionError("interval length below angle tolerance", static_cast<int>(spec.stage_index(k + 1)));
  }
  return lengths;
}

ArcFamily cantor_build(const CantorSpec& spec) {
  const std::vector<double> lengths = cantor_stage_lengths(spec);
  std::vector<double> starts{spec.host_start + 0.5 * (spec.host_length - lengths[0])};
  for (std::size_t k = 1; k < lengths.size(); ++k) {
    std::vector<double> next;
    next.reserve(2 * starts.size());
    for (double a : starts) {
      next.push_back(a);
      next.push_back(a + lengths[k - 1] - lengths[k]);
    }
    starts = std::move(next);
  }
  std::vector<Arc> arcs;
  arcs.reserve(starts.size());
  for (double a : starts) arcs.push_back(Arc::from_length(Angle(a), lengths.back()));
  return ArcFamily::disjoint(std::move(arcs));
}

long admissible_offset(const LengthRule& rule, int depth) {
  constexpr long kSearchLimit = 4096;
  CantorSpec spec;
  spec.rule = rule;
  spec.depth = depth;
  for (long offset = 0; offset <= kSearchLimit; ++offset) {
    spec.offset = offset;
    try {
      cantor_stage_lengths(spec);
      return offset;
    } catch (const ConstructionError&) {
    }
  }
  throw ConstructionError("no admissible offset below " + std::to_string(kSearchLimit), -1);
}

std::string to_string(Trend trend) {
  switch (trend) {
    case Trend::diverges_minus_inf: return "diverges_minus_inf";
    case Trend::diverges_plus_inf: return "diverges_plus_inf";
    case Trend::converges: return "converges";
    case Trend::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_statistic = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto m = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit fit;
  if (sxx <= 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ssr = std::max(0.0, syy - fit.slope * sxy);
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  const double se = x.size() > 2 ? std::sqrt(ssr / (m - 2.0) / sxx) : 0.0;
  fit.t_statistic = se > 0.0 ? std::abs(fit.slope) / se : std::numeric_limits<double>::infinity();
  return fit;
}

std::vector<std::size_t> log_checkpoints(std::size_t n) {
  constexpr std::size_t kCount = 64;
  std::vector<std::size_t> out;
  if (n <= kCount) {
    for (std::size_t k = 1; k <= n; ++k) out.push_back(k);
    return out;
  }
  const double top = std::log(static_cast<double>(n));
  for (std::size_t k = 0; k < kCount; ++k) {
    const auto c = static_cast<std::size_t>(std::llround(std::exp(top * static_cast<double>(k) / (kCount - 1))));
    if (out.empty() || c > out.back()) out.push_back(std::min(c, n));
  }
  out.back() = n;
  return out;
}

constexpr double kMinRSquared = 0.99;

void classify(SeriesDiagnostic& d) {
  const std::size_t n = d.partial_sums.size();
  if (n == 0) return;
  d.checkpoints = log_checkpoints(n);
  const std::vector<std::size_t> window(d.checkpoints.begin() + static_cast<long>(d.checkpoints.size() / 2),
                                        d.checkpoints.end());
  const double s_n = d.partial_sums.back();

  if (!std::isfinite(s_n)) {
    d.trend = s_n < 0 ? Trend::diverges_minus_inf : Trend::diverges_plus_inf;
    d.fit.model = "infinite_term";
    return;
  }

  double lo = s_n, hi = s_n;
  for (std::size_t c : window) {
    lo = std::min(lo, d.partial_sums[c - 1]);
    hi = std::max(hi, d.partial_sums[c - 1]);
  }
  if (hi - lo <= 1e-12 * std::max(1.0, std::abs(s_n))) {
    d.trend = Trend::converges;
    d.fit.model = "constant";
    d.fit.intercept = s_n;
    d.fit.r_squared = 1.0;
    d.limit = s_n;
    return;
  }
  if (window.size() < 4) return;

  // Decay of the terms themselves.
  const double sign = d.terms[window.front() - 1] > 0.0 ? 1.0 : -1.0;
  bool one_sign = true;
  std::vector<double> xs, logs, log_n;
  for (std::size_t c : window) {
    const double a = d.terms[c - 1];
    if (!(a * sign > 0.0)) {
      one_sign = false;
      break;
    }
    xs.push_back(static_cast<double>(c));
    log_n.push_back(std::log(static_cast<double>(c)));
    logs.push_back(std::log(std::abs(a)));
  }
  if (one_sign) {
    const double a_n = d.terms.back();
    const LineFit geo = fit_line(xs, logs);
    const double r = std::exp(geo.slope);
    if (geo.r_squared >= kMinRSquared && r <= 0.95) {
      d.trend = Trend::converges;
      d.fit = {"geometric", geo.slope, geo.intercept, r, geo.r_squared, geo.t_statistic};
      d.limit = s_n + a_n * r / (1.0 - r);
      return;
    }
    const LineFit pw = fit_line(log_n, logs);
    const double q = -pw.slope;
    if (pw.r_squared >= kMinRSquared && q >= 1.5) {
      d.trend = Trend::converges;
      d.fit = {"power_decay", pw.slope, pw.intercept, q, pw.r_squared, pw.t_statistic};
      d.limit = s_n + a_n * static_cast<double>(n) / (q - 1.0);
      return;
    }
  }

  // Growth models for the partial sums.
  std::vector<double> ys;
  for (std::size_t c : window) ys.push_back(d.partial_sums[c - 1]);
  TrendFit best;
  best.r_squared = -std::numeric_limits<double>::infinity();
  auto consider = [&](const std::string& model, double p, auto&& g) {
    std::vector<double> gx;
    for (std::size_t c : window) gx.push_back(g(static_cast<double>(c)));
    const LineFit f = fit_line(gx, ys);
    if (f.r_squared > best.r_squared) best = {model, f.slope, f.intercept, p, f.r_squared, f.t_statistic};
  };
  consider("log", 0.0, [](double x) { return std::log(x); });
  if (window.front() >= 3) consider("loglog", 0.0, [](double x) { return std::log(std::log(x)); });
  for (int k = 5; k <= 100; ++k) {
    const double p = 0.01 * k;
    consider("power", p, [p](double x) { return std::pow(x, p); });
  }
  d.fit = best;
  if (best.r_squared >= kMinRSquared && best.t_statistic >= 10.0 && best.coefficient != 0.0)
    d.trend = best.coefficient > 0.0 ? Trend::diverges_plus_inf : Trend::diverges_minus_inf;
}

}  // namespace

SeriesDiagnostic diagnose_series(std::vector<double> terms) {
  SeriesDiagnostic d;
  d.terms = std::move(terms);
  d.partial_sums.resize(d.terms.size());
  double s = 0.0;
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    s += d.terms[k];
    d.partial_sums[k] = s;
  }
  classify(d);
  return d;
}

SeriesDiagnostic cantor_capacity_series(const LengthRule& rule, double s, std::size_t n_terms) {
  if (!(s >= 0.0 && s < 1.0)) throw RangeError("s must lie in [0, 1)");
  if (n_terms == 0) throw ArgumentError("need at least one term");
  if (auto last = rule.last_index(); last && static_cast<long>(n_terms) > *last)
    throw ArgumentError("length table too short for the requested number of terms");
  std::vector<double> terms(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    const long n = static_cast<long>(k) + 1;
    terms[k] = std::exp(-static_cast<double>(n) * std::numbers::ln2 - s * rule.log_length(n));
  }
  return diagnose_series(std::move(terms));
}

SeriesDiagnostic carleson_sum(const ArcFamily& family, std::size_t n_terms) {
  if (!family.pairwise_disjoint()) throw ArgumentError("Carleson sum needs pairwise disjoint arcs");
  std::vector<double> lengths;
  lengths.reserve(family.size());
  for (const Arc& a : family.arcs()) lengths.push_back(a.length());
  return carleson_sum(std::move(lengths), n_terms);
}

SeriesDiagnostic carleson_sum(std::vector<double> lengths, std::size_t n_terms) {
  if (n_terms == 0 || n_terms > lengths.size())
    throw ArgumentError("term count must lie in [1, " + std::to_string(lengths.size()) + "]");
  double total = 0.0;
  for (double l : lengths) {
    if (!(l > 0.0)) throw ArgumentError("arc lengths must be positive");
    total += l;
  }
  if (total > kTwoPi * (1.0 + 1e-12)) throw ArgumentError("disjoint arcs cannot exceed total length 2pi");
  std::stable_sort(lengths.begin(), lengths.end(), std::greater<>());
  std::vector<double> terms(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) terms[k] = lengths[k] * std::log(lengths[k]);
  return diagnose_series(std::move(terms));
}

ArcFamily paper_example_arcs(std::size_t n_max) {
  if (n_max < 2) throw ArgumentError("example arcs need n_max >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(n_max - 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double x = static_cast<double>(n);
    arcs.emplace_back(Angle(1.0 / std::log(x + 1.0)), Angle(1.0 / std::log(x)));
  }
  return ArcFamily::disjoint(std::move(arcs));
}

std::vector<double> geometric_lengths(double l0, double ratio, std::size_t count) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw ArgumentError("geometric ratio must lie in (0, 1)");
  if (!(l0 > 0.0) || l0 * ratio / (1.0 - ratio) >= kTwoPi) throw ArgumentError("geometric arcs do not fit on the circle");
  std::vector<double> lengths(count);
  double len = l0;
  for (double& l : lengths) l = len *= ratio;
  return lengths;
}

UniquenessDiagnostic uniqueness_series(const std::vector<GridSet>& parts, const ArcFamily& arcs,
                                       double alpha, double beta, const SolverConfig& cfg,
                                       std::size_t n_terms) {
  if (!(beta > 0.0 && beta <= alpha && alpha <= 1.0)) throw RangeError("need 0 < beta <= alpha <= 1");
  if (parts.size() != arcs.size()) throw ArgumentError("one grid set per arc is required");
  if (!arcs.pairwise_disjoint()) throw ArgumentError("arcs must be pairwise disjoint");
  if (n_terms == 0 || n_terms > arcs.size()) throw ArgumentError("term count exceeds the number of arcs");

  UniquenessDiagnostic out;
  std::vector<double> terms(n_terms);
  bool zero = false;
  for (std::size_t k = 0; k < n_terms; ++k) {
    const Arc& arc = arcs.arcs()[k];
    if (!parts[k].is_subset_of(GridSet::cover(parts[k].grid(), arc)))
      throw ArgumentError("set part " + std::to_string(k) + " is not inside its arc");
    const double len = arc.length();
    const double cap = classical_capacity(parts[k], classical_exponent_for(beta), cfg).value;
    out.lengths.push_back(len);
    out.capacities.push_back(cap);
    if (cap > 0.0) {
      const double lg = (1.0 + alpha - beta) * std::log(len) - std::log(cap);
      out.logs.push_back(lg);
      terms[k] = len * lg;
    } else {
      zero = true;
      out.logs.push_back(-std::numeric_limits<double>::infinity());
      terms[k] = -std::numeric_limits<double>::infinity();
    }
  }
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < n_terms; ++k) {
    if (out.capacities[k] <= 0.0) continue;
    lx.push_back(std::log(out.lengths[k]));
    ly.push_back(std::log(out.capacities[k]));
  }
  out.capacity_exponent = lx.size() >= 2 ? fit_line(lx, ly).slope : std::numeric_limits<double>::quiet_NaN();
  out.series = diagnose_series(std::move(terms));
  out.series.zero_capacity = zero;
  if (zero) out.series.trend = Trend::diverges_minus_inf;
  return out;
}

std::vector<GridSet> cantor_in_arcs(const LengthRule& rule, int depth, const ArcFamily& arcs,
                                    const CircleGrid& grid) {
  std::vector<GridSet> parts;
  parts.reserve(arcs.size());
  for (const Arc& arc : arcs.arcs()) {
    CantorSpec spec = CantorSpec::in_arc(rule, depth, arc, true);
    spec.offset = rule.kind() == LengthRule::Kind::power ? admissible_offset(rule, depth) : 0;
    parts.push_back(GridSet::cover(grid, cantor_build(spec)));
  }
  return parts;
}

}  // namespace circpot

#include "circpot/simplex_qp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <unsupported/Eigen/FFT>

#include "circpot/errors.hpp"
#include "circpot/parallel.hpp"

namespace circpot {

std::string to_string(StepRule rule) {
  return rule == StepRule::frank_wolfe ? "frank_wolfe" : "projected_gradient";
}

StepRule parse_step_rule(const std::string& name) {
  if (name == "frank_wolfe" || name == "fw") return StepRule::frank_wolfe;
  if (name == "projected_gradient" || name == "pg") return StepRule::projected_gradient;
  throw ArgumentError("unknown step rule '" + name + "'");
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ArgumentError("solver tolerance must be positive");
  if (max_iterations < 1) throw ArgumentError("solver needs max_iterations >= 1");
}

namespace {

constexpr double kPolishTarget = 1e-12;

class CirculantQp {
 public:
  CirculantQp(const std::vector<double>& row, std::span<const std::size_t> cells)
      : row_(row), cells_(cells), n_(row.size()), m_(cells.size()) {}

  std::size_t size() const { return m_; }

  double entry(std::size_t a, std::size_t b) const {
    return row_[(cells_[b] + n_ - cells_[a]) % n_];
  }

  std::vector<double> matvec(std::span<const double> w) const {
    std::vector<double> g(m_, 0.0);
    detail::parallel_for(m_, [&](std::size_t a) {
      double acc = 0.0;
      for (std::size_t b = 0; b < m_; ++b) {
        if (w[b] != 0.0) acc += entry(a, b) * w[b];
      }
      g[a] = acc;
    });
    return g;
  }

  void column_into(std::size_t b, std::vector<double>& col) const {
    col.resize(m_);
    for (std::size_t a = 0; a < m_; ++a) col[a] = entry(a, b);
  }

  // FFT-based product, O(N log N).
  std::vector<double> fast_matvec(std::span<const double> w) {
    if (spectrum_.empty()) {
      std::vector<std::complex<double>> r(row_.begin(), row_.end());
      fft_.fwd(spectrum_, r);
    }
    std::vector<std::complex<double>> x(n_, 0.0), xf, y;
    for (std::size_t a = 0; a < m_; ++a) x[cells_[a]] = w[a];
    fft_.fwd(xf, x);
    for (std::size_t k = 0; k < n_; ++k) xf[k] *= spectrum_[k].real();
    fft_.inv(y, xf);
    std::vector<double> g(m_);
    for (std::size_t a = 0; a < m_; ++a) g[a] = y[cells_[a]].real();
    return g;
  }

  double max_row_abs_sum() const {
    double best = 0.0;
    for (std::size_t a = 0; a < m_; ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < m_; ++b) s += std::abs(entry(a, b));
      best = std::max(best, s);
    }
    return best;
  }

 private:
  const std::vector<double>& row_;
  std::span<const std::size_t> cells_;
  std::size_t n_;
  std::size_t m_;
  Eigen::FFT<double> fft_;
  std::vector<std::complex<double>> spectrum_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double kkt_residual(std::span<const double> w, std::span<const double> g, double q) {
  double min_all = std::numeric_limits<double>::infinity();
  double max_support = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < w.size(); ++a) {
    min_all = std::min(min_all, g[a]);
    if (w[a] > 0.0) max_support = std::max(max_support, g[a]);
  }
  const double scale = std::max(std::abs(q), std::numeric_limits<double>::min());
  return std::max({q - min_all, max_support - q, 0.0}) / scale;
}

struct Iterate {
  std::vector<double> w;
  double q = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
};

// Primal active-set method started from a feasible w.
std::optional<Iterate> polish(const CirculantQp& qp, std::vector<double> w, int max_rounds, int& rounds) {
  const std::size_t m = qp.size();
  for (int round = 0; round < max_rounds; ++round) {
    ++rounds;
    std::vector<std::size_t> active;
    for (std::size_t a = 0; a < m; ++a)
      if (w[a] > 0.0) active.push_back(a);
    if (active.empty()) return std::nullopt;

    const auto k = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = qp.entry(active[r], active[c]);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
    if (ldlt.info() != Eigen::Success) return std::nullopt;
    const Eigen::VectorXd v = ldlt.solve(Eigen::VectorXd::Ones(k));
    const double total = v.sum();
    if (!(total > 0.0) || !std::isfinite(total)) return std::nullopt;
    const Eigen::VectorXd y = v / total;

    if (y.minCoeff() >= 0.0) {
      for (Eigen::Index r = 0; r < k; ++r) w[active[r]] = y(r);
    } else {
      // Move toward y until the first coordinate hits zero, then drop it.
      double tau = 1.0;
      Eigen::Index blocking = -1;
      for (Eigen::Index r = 0; r < k; ++r) {
        const double d = y(r) - w[active[r]];
        if (d < 0.0 && w[active[r]] / -d < tau) {
          tau = w[active[r]] / -d;
          blocking = r;
        }
      }
      for (Eigen::Index r = 0; r < k; ++r) {
        double& wa = w[active[r]];
        wa = std::max(0.0, wa + tau * (y(r) - wa));
      }
      if (blocking >= 0) w[active[blocking]] = 0.0;
      const double s = std::accumulate(w.begin(), w.end(), 0.0);
      for (double& x : w) x /= s;
      continue;
    }

    const std::vector<double> g = qp.matvec(w);
    const double q = dot(w, g);
    std::size_t worst = m;
    double worst_g = q;
    for (std::size_t a = 0; a < m; ++a) {
      if (w[a] > 0.0) continue;
      if (g[a] < worst_g) {
        worst_g = g[a];
        worst = a;
      }
    }
    if (worst < m && worst_g < q - kPolishTarget * std::abs(q)) {
      // Seed the new coordinate with a tiny positive weight so it joins the
      // active set; the next solve sets its value.
      w[worst] = std::numeric_limits<double>::min();
      continue;
    }
    return Iterate{w, q, kkt_residual(w, g, q)};
  }
  return std::nullopt;
}

struct StepState {
  std::vector<double> w;
  std::vector<double> g;
  double q = 0.0;
};

class FrankWolfe {
 public:
  explicit FrankWolfe(const CirculantQp& qp) : qp_(qp) {}

  void step(StepState& s) {
    const std::size_t m = qp_.size();
    std::size_t fw = 0, away = m;
    double g_fw = std::numeric_limits<double>::infinity();
    double g_away = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < m; ++a) {
      if (s.g[a] < g_fw) {
        g_fw = s.g[a];
        fw = a;
      }
      if (s.w[a] > 0.0 && s.g[a] > g_away) {
        g_away = s.g[a];
        away = a;
      }
    }
    const double gap_fw = s.q - g_fw;
    const double gap_away = away < m ? g_away - s.q : 0.0;
    if (gap_fw >= gap_away) {
      // d = e_fw - w
      const double slope = g_fw - s.q;
      const double curv = qp_.entry(fw, fw) - 2.0 * g_fw + s.q;
      double gamma = curv > 0.0 ? -slope / curv : 1.0;
      gamma = std::clamp(gamma, 0.0, 1.0);
      if (gamma == 0.0) return;
      qp_.column_into(fw, col_);
      for (std::size_t a = 0; a < m; ++a) {
        s.w[a] *= (1.0 - gamma);
        s.g[a] = (1.0 - gamma) * s.g[a] + gamma * col_[a];
      }
      s.w[fw] += gamma;
      s.q += 2.0 * gamma * slope + gamma * gamma * curv;
    } else {
      // d = w - e_away
      const double wa = s.w[away];
      const double gamma_max = wa < 1.0 ? wa / (1.0 - wa) : 1e300;
      const double slope = s.q - g_away;
      const double curv = s.q - 2.0 * g_away + qp_.entry(away, away);
      double gamma = curv > 0.0 ? -slope / curv : gamma_max;
      gamma = std::clamp(gamma, 0.0, gamma_max);
      if (gamma == 0.0) return;
      qp_.column_into(away, col_);
      for (std::size_t a = 0; a < m; ++a) {
        s.w[a] *= (1.0 + gamma);
        s.g[a] = (1.0 + gamma) * s.g[a] - gamma * col_[a];
      }
      s.w[away] -= gamma;
      if (gamma == gamma_max || s.w[away] < 0.0) s.w[away] = 0.0;
      s.q += 2.0 * gamma * slope + gamma * gamma * curv;
    }
  }

 private:
  const CirculantQp& qp_;
  std::vector<double> col_;
};

// Euclidean projection onto the probability simplex.
void project_to_simplex(std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) theta = t;
  }
  for (double& x : v) x = std::max(0.0, x - theta);
}

}  // namespace

double simplex_kkt_residual(const std::vector<double>& row, std::span<const std::size_t> cells,
                            std::span<const double> weights) {
  CirculantQp qp(row, cells);
  const std::vector<double> g = qp.matvec(weights);
  return kkt_residual(weights, g, dot(weights, g));
}

SimplexQpResult minimize_on_simplex(const std::vector<double>& row, std::span<const std::size_t> cells,
                                    const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t m = cells.size();
  if (m == 0) throw ArgumentError("simplex problem needs at least one cell");
  CirculantQp qp(row, cells);

  StepState s;
  s.w.assign(m, 1.0 / static_cast<double>(m));
  s.g = qp.matvec(s.w);
  s.q = dot(s.w, s.g);
  double residual = kkt_residual(s.w, s.g, s.q);

  SimplexQpResult out;
  int polish_rounds = 0;
  const int checkpoint_rounds = 64;

  auto finish = [&](const Iterate& it, int iterations) {
    out.weights = it.w;
    out.objective = it.q;
    out.iterations = iterations;
    out.polish_rounds = polish_rounds;
    out.kkt_residual = it.residual;
    return out;
  };

  int iteration = 0;
  long next_checkpoint = 64;
  FrankWolfe fw(qp);
  // Projected-gradient state (FISTA with restart).
  std::vector<double> y, x_prev;
  double t_momentum = 1.0;
  double step = 0.0;
  if (cfg.step_rule == StepRule::projected_gradient) {
    y = s.w;
    x_prev = s.w;
    step = 1.0 / (2.0 * qp.max_row_abs_sum());
  }

  while (residual > kPolishTarget && residual > cfg.tolerance * 1e-4 && iteration < cfg.max_iterations) {
    if (cfg.step_rule == StepRule::frank_wolfe) {
      fw.step(s);
      if ((iteration + 1) % 1000 == 0) {
        s.g = qp.matvec(s.w);
        s.q = dot(s.w, s.g);
      }
    } else {
      std::vector<double> gy = qp.fast_matvec(y);
      std::vector<double> x(m);
      for (std::size_t a = 0; a < m; ++a) x[a] = y[a] - 2.0 * step * gy[a];
      project_to_simplex(x);
      std::vector<double> gx = qp.fast_matvec(x);
      const double qx = dot(x, gx);
      if (qx > s.q) {
        // Restart momentum from the last accepted point.
        t_momentum = 1.0;
        y = s.w;
      } else {
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
        for (std::size_t a = 0; a < m; ++a) y[a] = x[a] + ((t_momentum - 1.0) / t_next) * (x[a] - s.w[a]);
        t_momentum = t_next;
        s.w = std::move(x);
        s.g = std::move(gx);
        s.q = qx;
      }
    }
    ++iteration;
    residual = kkt_residual(s.w, s.g, s.q);
    if (iteration == next_checkpoint && residual > kPolishTarget) {
      next_checkpoint *= 4;
      if (auto polished = polish(qp, s.w, checkpoint_rounds, polish_rounds);
          polished && polished->residual <= cfg.tolerance) {
        return finish(*polished, iteration);
      }
    }
  }

  // Exact gradient for the final verdict.
  s.g = qp.matvec(s.w);
  s.q = dot(s.w, s.g);
  Iterate current{s.w, s.q, kkt_residual(s.w, s.g, s.q)};
  if (current.residual > kPolishTarget) {
    const int rounds = static_cast<int>(std::max<std::size_t>(64, 4 * m));
    if (auto polished = polish(qp, s.w, rounds, polish_rounds);
        polished && polished->residual <= current.residual) {
      current = *polished;
    }
  }
  if (current.residual > cfg.tolerance) {
    throw ConvergenceError("simplex solver did not reach the KKT tolerance", current.w, current.q, iteration,
                           current.residual);
  }
  return finish(current, iteration);
}

}  // namespace circpot

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <ostream>

#include "circpot/capacity.hpp"
#include "circpot/energy.hpp"
#include "circpot/errors.hpp"
#include "circpot/extension.hpp"
#include "circpot/poincare.hpp"
#include "circpot/uniqueness.hpp"
#include "io.hpp"
#include "suite.hpp"

namespace circpot::cli {

using io::json;

namespace {

struct GlobalFlags {
  std::string config_path;
  std::size_t grid_n = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tolerance = 0.0;
  int max_iterations = 0;
  std::string step;
  std::string out;
};

io::Config resolve_config(const GlobalFlags& g) {
  io::Config cfg = g.config_path.empty() ? io::Config{} : io::load_config(g.config_path);
  if (g.grid_n) cfg.grid_n = g.grid_n;
  if (g.seed_set) cfg.seed = g.seed;
  if (g.tolerance > 0.0) cfg.solver.tolerance = g.tolerance;
  if (g.max_iterations > 0) cfg.solver.max_iterations = g.max_iterations;
  if (!g.step.empty()) cfg.solver.step_rule = parse_step_rule(g.step);
  if (!g.out.empty()) cfg.csv_path = g.out;
  cfg.validate();
  return cfg;
}

void add_meta(json& j, const io::Config& cfg, std::size_t grid_n) {
  j["grid_n"] = grid_n;
  j["tolerance"] = cfg.solver.tolerance;
  j["step_rule"] = to_string(cfg.solver.step_rule);
}

void emit(std::ostream& out, const io::Config& cfg, const json& j) {
  if (cfg.emit_json) out << j.dump(2) << '\n';
}

// --- energy ---------------------------------------------------------------

struct EnergyArgs {
  std::string fn;
  double alpha = 1.0;
  std::string arc_i, arc_j;
};

json cmd_energy(const EnergyArgs& a, const io::Config& cfg) {
  const CircleGrid grid = io::function_grid(a.fn, cfg.grid_n);
  const BoundarySamples f = io::load_function(a.fn, grid, nullptr);
  json j{{"command", "energy"}, {"alpha", a.alpha}};
  if (!a.arc_i.empty()) {
    const Arc i = io::parse_arc(io::read_json_argument(a.arc_i));
    const Arc jj = a.arc_j.empty() ? i : io::parse_arc(io::read_json_argument(a.arc_j));
    j["value"] = dirichlet_energy_local(f, i, jj, a.alpha);
    j["arc_i"] = io::to_json(i);
    j["arc_j"] = io::to_json(jj);
  } else {
    const GridSet all = GridSet::full(grid);
    const DirichletEnergy d = dirichlet_energy_on(f, all, all, a.alpha);
    j["value"] = d.value;
    j["diagonal_estimate"] = d.diagonal_estimate;

    // Coefficient forms over the stored frequencies.
    const std::size_t m = std::min(cfg.truncation(), grid.size() / 2);
    const FourierCoeffs c = fourier_coefficients(f, m);
    double peak = 0.0;
    for (long n = -static_cast<long>(m); n <= static_cast<long>(m); ++n) peak = std::max(peak, std::norm(c.at(n)));
    double weighted = 0.0;
    std::vector<std::vector<double>> rows;
    for (long n = -static_cast<long>(m); n <= static_cast<long>(m); ++n) {
      const double p = std::norm(c.at(n));
      if (n == 0 || p <= 1e-28 * peak) continue;
      const double w = energy_weight(std::abs(n), a.alpha);
      weighted += w * p;
      rows.push_back({static_cast<double>(n), p, w});
    }
    j["fourier_value"] = weighted;
    j["fourier_norm"] = fourier_energy(c, a.alpha);
    j["fourier_m"] = m;
    if (!cfg.csv_path.empty()) io::write_csv(cfg.csv_path, {"n", "abs_coeff_sq", "weight"}, rows);
  }
  add_meta(j, cfg, grid.size());
  return j;
}

// --- capacity -------------------------------------------------------------

struct CapacityArgs {
  std::string method = "classical";
  double alpha = 0.5;
  std::string set;
};

void capacity_csv(const std::string& path, const CapacityEstimate& c) {
  const CircleGrid grid(c.grid_n);
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> row{static_cast<double>(k), grid.angle(k), c.measure ? c.measure->weights()[k] : 0.0};
    if (!c.density.empty()) row.push_back(c.density[k]);
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"cell", "angle", "weight"};
  if (!c.density.empty()) header.push_back("density");
  io::write_csv(path, header, rows);
}

json cmd_capacity(const CapacityArgs& a, const io::Config& cfg) {
  const CircleGrid grid(cfg.grid_n);
  const GridSet set = io::load_set(a.set, grid);
  json j;
  if (a.method == "compare") {
    const ComparabilityReport r = comparability_report(set, a.alpha, cfg.solver);
    j = {{"beta", r.beta},
         {"c_classical", r.c_classical},
         {"c_l2", r.c_l2},
         {"ratio", r.ratio},
         {"classical", io::to_json(r.classical)},
         {"l2", io::to_json(r.l2)}};
  } else {
    CapacityEstimate c;
    if (a.method == "classical")
      c = classical_capacity(set, a.alpha, cfg.solver);
    else if (a.method == "l2")
      c = l2_capacity(set, a.alpha, cfg.solver);
    else
      throw ArgumentError("unknown capacity method '" + a.method + "' (classical, l2, compare)");
    j = io::to_json(c);
    if (!cfg.csv_path.empty() && c.grid_n) capacity_csv(cfg.csv_path, c);
  }
  j["command"] = "capacity";
  j["set_cells"] = set.count();
  j["set_measure"] = set.measure();
  add_meta(j, cfg, grid.size());
  return j;
}

// --- extend ---------------------------------------------------------------

struct ExtendArgs {
  std::string fn;
  double theta = 0.5;
  double gamma = 0.5;
  double alpha = 1.0;
};

json cmd_extend(const ExtendArgs& a, const io::Config& cfg) {
  const CircleGrid grid = io::function_grid(a.fn, cfg.grid_n);
  const BoundarySamples f = io::load_function(a.fn, grid, nullptr);
  const ExtensionSetup setup(a.theta, a.gamma);
  const ExtensionRatio r = extension_ratio(f, setup, a.alpha);
  const BoundarySamples ft = extend(f, setup);
  const SixTermDecomposition six = six_term_decomposition(ft, setup, a.alpha);
  json j{{"command", "extend"},
         {"theta", a.theta},
         {"gamma", a.gamma},
         {"alpha", a.alpha},
         {"d_i", r.d_i},
         {"d_j", r.d_j},
         {"ratio", r.ratio},
         {"ceiling", kExtensionRatioCeiling},
         {"within_ceiling", r.ratio <= kExtensionRatioCeiling},
         {"six_terms",
          {{"d_i", six.d_i}, {"d_l", six.d_l}, {"d_r", six.d_r}, {"d_il", six.d_il}, {"d_ir", six.d_ir}, {"d_lr", six.d_lr}}},
         {"six_term_sum", six.sum()},
         {"c_gamma", setup.c_gamma()},
         {"theta_gamma", setup.theta_gamma()}};
  if (!cfg.csv_path.empty()) {
    const BoundarySamples phi = bump_phi(grid, setup);
    const TestFunction big_f = test_function_f(ft, phi, setup);
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < grid.size(); ++k)
      rows.push_back({grid.angle(k), f[k].real(), f[k].imag(), ft[k].real(), ft[k].imag(), phi[k].real(),
                      big_f.values[k].real()});
    io::write_csv(cfg.csv_path, {"angle", "f_re", "f_im", "ftilde_re", "ftilde_im", "phi", "F"}, rows);
  }
  add_meta(j, cfg, grid.size());
  return j;
}

// --- poincare-check -------------------------------------------------------

struct PoincareArgs {
  double alpha = 1.0;
  double beta = 0.5;
  double gamma = 0.5;
  std::string set;
  std::string arc;
  std::string fn;
  std::vector<double> sweep;
};

json cmd_poincare(const PoincareArgs& a, const io::Config& cfg) {
  const PoincareParams params{a.alpha, a.beta, a.gamma};
  const Arc arc = io::parse_arc(io::read_json_argument(a.arc));
  json j{{"command", "poincare-check"}};
  if (!a.sweep.empty()) {
    const CircleGrid grid(cfg.grid_n);
    const GridSet e = io::load_set(a.set, grid);
    json reports = json::array();
    std::vector<std::vector<double>> rows;
    double best = 0.0;
    for (double delta : a.sweep) {
      const PoincareReport r = poincare_check(spike_function(e, delta), e, arc, params, cfg.solver);
      json rj = io::to_json(r);
      rj["delta"] = delta;
      reports.push_back(rj);
      rows.push_back({delta, r.ratio, r.lhs, r.cap, r.energy, r.scale});
      best = std::max(best, r.ratio);
    }
    j["reports"] = reports;
    j["max_ratio"] = best;
    if (!cfg.csv_path.empty()) io::write_csv(cfg.csv_path, {"delta", "ratio", "lhs", "cap", "energy", "scale"}, rows);
    add_meta(j, cfg, grid.size());
    return j;
  }
  if (a.fn.empty()) throw ArgumentError("poincare-check needs --fn or --sweep");
  const CircleGrid grid = io::function_grid(a.fn, cfg.grid_n);
  const GridSet e = io::load_set(a.set, grid);
  const PoincareReport r = poincare_check(io::load_function(a.fn, grid, &e), e, arc, params, cfg.solver);
  j.update(io::to_json(r));
  add_meta(j, cfg, grid.size());
  return j;
}

// --- series ---------------------------------------------------------------

void series_csv(const std::string& path, const SeriesDiagnostic& d) {
  std::vector<std::vector<double>> rows;
  rows.reserve(d.terms.size());
  for (std::size_t k = 0; k < d.terms.size(); ++k)
    rows.push_back({static_cast<double>(k + 1), d.terms[k], d.partial_sums[k]});
  io::write_csv(path, {"n", "term", "partial_sum"}, rows);
}

struct SeriesArgs {
  std::string rule = "power:beta=0.5";
  double s = 0.5;
  std::size_t n = 1000;
  std::string arcs = "paper-example";
  double alpha = 0.5;
  double beta = 0.5;
  std::string spec;
};

json cmd_series_cantor(const SeriesArgs& a, const io::Config& cfg) {
  const SeriesDiagnostic d = cantor_capacity_series(io::parse_length_rule(a.rule), a.s, a.n);
  json j = io::to_json(d);
  j["command"] = "series cantor-capacity";
  j["rule"] = a.rule;
  j["s"] = a.s;
  if (!cfg.csv_path.empty()) series_csv(cfg.csv_path, d);
  return j;
}

json cmd_series_carleson(const SeriesArgs& a, const io::Config& cfg) {
  SeriesDiagnostic d;
  if (a.arcs == "paper-example") {
    d = carleson_sum(paper_example_arcs(a.n + 1), a.n);
  } else if (a.arcs.rfind("geometric", 0) == 0) {
    const auto comma = a.arcs.find(',');
    const auto kv = io::parse_kv(comma == std::string::npos ? "" : a.arcs.substr(comma + 1));
    for (const auto& [k, v] : kv)
      if (k != "ratio" && k != "l0") throw ArgumentError("geometric arcs: unknown parameter '" + k + "'");
    const double ratio = kv.count("ratio") ? io::parse_number(kv.at("ratio"), "ratio") : 0.5;
    const double l0 = kv.count("l0") ? io::parse_number(kv.at("l0"), "l0") : 1.0;
    d = carleson_sum(geometric_lengths(l0, ratio, a.n), a.n);
  } else {
    const json arcs = io::read_json_argument(a.arcs);
    const json& list = arcs.is_object() ? arcs.at("arcs") : arcs;
    std::vector<Arc> v;
    for (const json& x : list) v.push_back(io::parse_arc(x));
    d = carleson_sum(ArcFamily::disjoint(std::move(v)), a.n);
  }
  json j = io::to_json(d);
  j["command"] = "series carleson";
  j["arcs"] = a.arcs;
  if (!cfg.csv_path.empty()) series_csv(cfg.csv_path, d);
  return j;
}

json cmd_series_uniqueness(const SeriesArgs& a, const io::Config& cfg) {
  const json spec = a.spec.empty() ? json::object() : io::read_json_argument(a.spec);
  if (!spec.is_object()) throw ArgumentError("uniqueness spec must be a JSON object");
  const std::size_t grid_n = spec.value("grid_n", std::size_t{65536});
  io::Config local = cfg;
  local.grid_n = grid_n;
  local.validate();
  const CircleGrid grid(grid_n);

  ArcFamily arcs;
  const json arcs_j = spec.value("arcs", json("paper-example"));
  if (arcs_j.is_string()) {
    if (arcs_j != "paper-example") throw ArgumentError("unknown arc family '" + arcs_j.get<std::string>() + "'");
    arcs = paper_example_arcs(a.n + 1);
  } else {
    std::vector<Arc> v;
    for (const json& x : arcs_j) v.push_back(io::parse_arc(x));
    arcs = ArcFamily::disjoint(std::move(v));
  }

  std::vector<GridSet> parts;
  if (spec.contains("cantor")) {
    const json& c = spec.at("cantor");
    parts = cantor_in_arcs(io::parse_length_rule(c.value("rule", std::string("power:beta=0.5"))), c.value("depth", 6),
                           arcs, grid);
  } else {
    for (const Arc& arc : arcs.arcs()) parts.push_back(GridSet::cover(grid, arc));
  }
  const UniquenessDiagnostic u = uniqueness_series(parts, arcs, a.alpha, a.beta, cfg.solver, a.n);
  json j = io::to_json(u.series);
  j["command"] = "series uniqueness";
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  j["capacities"] = u.capacities;
  j["lengths"] = u.lengths;
  j["capacity_exponent"] = std::isfinite(u.capacity_exponent) ? json(u.capacity_exponent) : json(nullptr);
  j["monotone_decreasing"] = std::is_sorted(u.series.partial_sums.rbegin(), u.series.partial_sums.rend());
  j["note"] = "E cap I_n are depth-limited grid covers (supersets); the point {1} has zero capacity and is omitted";
  add_meta(j, cfg, grid_n);
  if (!cfg.csv_path.empty()) {
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < u.series.terms.size(); ++k)
      rows.push_back({static_cast<double>(k + 1), u.lengths[k], u.capacities[k], u.series.terms[k],
                      u.series.partial_sums[k]});
    io::write_csv(cfg.csv_path, {"n", "length", "capacity", "term", "partial_sum"}, rows);
  }
  return j;
}

// --- cantor ---------------------------------------------------------------

struct CantorArgs {
  std::string rule = "power:beta=0.5";
  int depth = 0;
  std::string host = "full";
  std::string offset = "auto";
  bool fit_host = false;
};

json cmd_cantor(const CantorArgs& a, const io::Config& cfg) {
  CantorSpec spec;
  spec.rule = io::parse_length_rule(a.rule);
  spec.depth = a.depth;
  if (a.host != "full") {
    const Arc host = io::parse_arc(io::read_json_argument(a.host));
    spec.host_start = host.start().radians();
    spec.host_length = host.length();
  }
  spec.fit_host = a.fit_host;
  const std::optional<long> offset = io::parse_offset(a.offset);
  spec.offset = offset ? *offset : admissible_offset(spec.rule, spec.depth);
  const ArcFamily family = cantor_build(spec);
  json j = io::to_json(family);
  j["command"] = "cantor";
  j["rule"] = spec.rule.describe();
  j["depth"] = spec.depth;
  j["offset"] = spec.offset;
  j["count"] = family.size();
  j["total_length"] = family.total_length();
  j["stage_lengths"] = cantor_stage_lengths(spec);
  if (!cfg.csv_path.empty()) {
    std::vector<std::vector<double>> rows;
    for (const Arc& arc : family.arcs()) rows.push_back({arc.start().radians(), arc.end().radians(), arc.length()});
    io::write_csv(cfg.csv_path, {"start", "end", "length"}, rows);
  }
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potential theory on the unit circle: energies, capacities, extension, Poincare and series checks",
               "circpot"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--grid-n", g.grid_n, "grid size (power of two >= 64)");
  app.add_option("--seed", g.seed, "seed for random test families")->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--tolerance", g.tolerance, "relative KKT tolerance of the capacity solvers");
  app.add_option("--max-iterations", g.max_iterations, "solver iteration budget");
  app.add_option("--step", g.step, "step rule: fw or pg");
  app.add_option("--out", g.out, "CSV output path");

  EnergyArgs ea;
  auto* energy = app.add_subcommand("energy", "fractional Dirichlet energy of a boundary function");
  energy->add_option("--fn", ea.fn, "CSV samples or builtin:<name>,k=v")->required();
  energy->add_option("--alpha", ea.alpha, "energy exponent in (0, 1]")->required();
  energy->add_option("--arc-i", ea.arc_i, "restrict to I (JSON arc)");
  energy->add_option("--arc-j", ea.arc_j, "second arc J (JSON arc, default I)");

  CapacityArgs ca;
  auto* capacity = app.add_subcommand("capacity", "classical or L2 capacity of a set");
  capacity->add_option("--method", ca.method, "classical, l2 or compare");
  capacity->add_option("--alpha", ca.alpha, "capacity exponent (beta for compare)")->required();
  capacity->add_option("--set", ca.set, "set: builtin name, JSON text or JSON file")->required();

  ExtendArgs xa;
  auto* ext = app.add_subcommand("extend", "reflection extension from I to J and its energy ratio");
  ext->add_option("--fn", xa.fn, "CSV samples or builtin:<name>,k=v")->required();
  ext->add_option("--theta", xa.theta, "half-length of I")->required();
  ext->add_option("--gamma", xa.gamma, "gamma in (0, 1)")->required();
  ext->add_option("--alpha", xa.alpha, "energy exponent in (0, 1]");

  PoincareArgs pa;
  auto* poincare = app.add_subcommand("poincare-check", "both sides of the capacitary Poincare inequality");
  poincare->add_option("--alpha", pa.alpha)->required();
  poincare->add_option("--beta", pa.beta)->required();
  poincare->add_option("--gamma", pa.gamma)->required();
  poincare->add_option("--set", pa.set, "zero set E")->required();
  poincare->add_option("--arc", pa.arc, "arc I (JSON)")->required();
  poincare->add_option("--fn", pa.fn, "CSV samples or builtin:<name>,k=v");
  poincare->add_option("--sweep", pa.sweep, "spike sharpness values delta to sweep")->delimiter(',');

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "series diagnostics");
  series->require_subcommand(1);
  auto* s_cantor = series->add_subcommand("cantor-capacity", "sum 2^{-n} l_n^{-s}");
  s_cantor->add_option("--rule", sa.rule, "length rule, e.g. power:beta=0.5");
  s_cantor->add_option("--s", sa.s, "exponent in [0, 1)")->required();
  s_cantor->add_option("--n", sa.n, "number of terms")->required();
  auto* s_carleson = series->add_subcommand("carleson", "sum |I_n| log |I_n|");
  s_carleson->add_option("--arcs", sa.arcs, "paper-example, geometric,ratio=r[,l0=x] or JSON arcs");
  s_carleson->add_option("--n", sa.n, "number of terms")->required();
  auto* s_unique = series->add_subcommand("uniqueness", "the divergence criterion for uniqueness sets");
  s_unique->add_option("--alpha", sa.alpha)->required();
  s_unique->add_option("--beta", sa.beta)->required();
  s_unique->add_option("--spec", sa.spec, "JSON: arcs, cantor {rule, depth}, grid_n");
  s_unique->add_option("--n", sa.n, "number of terms")->required();

  CantorArgs cta;
  auto* cantor = app.add_subcommand("cantor", "build a generalized Cantor set");
  cantor->add_option("--rule", cta.rule, "length rule: power:beta=b, ratio:l0=x,r=y, table:l0,l1,...");
  cantor->add_option("--depth", cta.depth, "construction depth")->required();
  cantor->add_option("--host", cta.host, "full or a JSON arc");
  cantor->add_option("--offset", cta.offset, "index offset n0 or auto");
  cantor->add_flag("--fit-host", cta.fit_host, "scale lengths so stage 0 fills the host");

  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--inject-fault", fault, "corrupt a component for testing: kernel")
      ->check(CLI::IsMember({"kernel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    const io::Config cfg = resolve_config(g);
    json result;
    if (energy->parsed()) {
      result = cmd_energy(ea, cfg);
    } else if (capacity->parsed()) {
      result = cmd_capacity(ca, cfg);
    } else if (ext->parsed()) {
      result = cmd_extend(xa, cfg);
    } else if (poincare->parsed()) {
      result = cmd_poincare(pa, cfg);
    } else if (s_cantor->parsed()) {
      result = cmd_series_cantor(sa, cfg);
    } else if (s_carleson->parsed()) {
      result = cmd_series_carleson(sa, cfg);
    } else if (s_unique->parsed()) {
      result = cmd_series_uniqueness(sa, cfg);
    } else if (cantor->parsed()) {
      result = cmd_cantor(cta, cfg);
    } else if (selftest->parsed()) {
      acceptance::Options opt;
      opt.grid_n = cfg.grid_n;
      opt.seed = cfg.seed;
      opt.solver = cfg.solver;
      opt.kernel_fault = fault == "kernel";
      const auto results = acceptance::run_suite(opt, &err);
      result = acceptance::to_json(opt, results);
      emit(out, cfg, result);
      return result.at("all_pass").get<bool>() ? kOk : kSelftestFailed;
    }
    emit(out, cfg, result);
    return kOk;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (iterations " << e.iterations() << ", residual " << e.kkt_residual() << ")\n";
    return kNoConvergence;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << " (stage " << e.stage() << ")\n";
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const json::exception& e) {
    err << "error: bad input: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kSelftestFailed;
  }
}

}  // namespace circpot::cli

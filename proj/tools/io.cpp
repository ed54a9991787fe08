#include "io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "circpot/errors.hpp"
#include "circpot/functions.hpp"

namespace circpot::io {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

long parse_integer(const std::string& text, const std::string& what) {
  long value = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) throw ArgumentError(what + ": not an integer: '" + text + "'");
  return value;
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key,
                           const std::string& where) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ArgumentError(where + " needs '" + key + "='");
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ArgumentError(where + ": unknown parameter '" + key + "'");
  }
}

}  // namespace

void Config::validate() const {
  if (grid_n < 64 || !is_power_of_two(grid_n)) throw ArgumentError("grid_n must be a power of two >= 64");
  if (truncation() > grid_n / 2) throw ArgumentError("fourier_m must not exceed grid_n / 2");
  solver.validate();
}

void apply_config_json(Config& cfg, const json& j) {
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "grid_n") {
      cfg.grid_n = value.get<std::size_t>();
    } else if (key == "fourier_m") {
      cfg.fourier_m = value.get<std::size_t>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "solver") {
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "tolerance")
          cfg.solver.tolerance = sv.get<double>();
        else if (sk == "max_iterations")
          cfg.solver.max_iterations = sv.get<int>();
        else if (sk == "step_rule")
          cfg.solver.step_rule = parse_step_rule(sv.get<std::string>());
        else
          throw ArgumentError("config: unknown solver key '" + sk + "'");
      }
    } else if (key == "output") {
      for (const auto& [ok, ov] : value.items()) {
        if (ok == "json")
          cfg.emit_json = ov.get<bool>();
        else if (ok == "csv")
          cfg.csv_path = ov.get<std::string>();
        else
          throw ArgumentError("config: unknown output key '" + ok + "'");
      }
    } else {
      throw ArgumentError("config: unknown key '" + key + "'");
    }
  }
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file " + path);
  Config cfg;
  try {
    apply_config_json(cfg, json::parse(in));
    cfg.validate();
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config: ") + e.what());
  }
  return cfg;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (!out.emplace(key, trim(item.substr(eq + 1))).second) throw ArgumentError("duplicate key '" + key + "'");
  }
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(what + ": not a number: '" + text + "'");
  }
}

LengthRule parse_length_rule(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = trim(text.substr(0, colon));
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "table") {
    std::vector<double> lengths;
    for (const std::string& item : split(rest, ',')) lengths.push_back(parse_number(item, "length table"));
    return LengthRule::table(std::move(lengths));
  }
  const auto kv = parse_kv(rest);
  if (kind == "power") {
    reject_unknown(kv, {"beta"}, "power rule");
    return LengthRule::power(parse_number(require(kv, "beta", "power rule"), "beta"));
  }
  if (kind == "ratio") {
    reject_unknown(kv, {"l0", "r"}, "ratio rule");
    const double l0 = kv.count("l0") ? parse_number(kv.at("l0"), "l0") : 1.0;
    return LengthRule::ratio(l0, parse_number(require(kv, "r", "ratio rule"), "r"));
  }
  throw ArgumentError("unknown length rule '" + kind + "' (power, ratio, table)");
}

std::optional<long> parse_offset(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return parse_integer(text, "offset");
}

json read_json_argument(const std::string& arg) {
  const std::string text = trim(arg);
  try {
    if (!text.empty() && (text.front() == '{' || text.front() == '[' || text.front() == '"')) return json::parse(text);
    if (std::filesystem::is_regular_file(text)) {
      std::ifstream in(text);
      return json::parse(in);
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
  // Bare word: a builtin name.
  return json(text);
}

Arc parse_arc(const json& j) {
  if (j.is_array() && j.size() == 2) return Arc(Angle(j[0].get<double>()), Angle(j[1].get<double>()));
  if (!j.is_object()) throw ArgumentError("arc must be {\"start\", \"end\"} or {\"center\", \"length\"}");
  if (j.contains("start") && j.contains("end"))
    return Arc(Angle(j.at("start").get<double>()), Angle(j.at("end").get<double>()));
  if (j.contains("center") && j.contains("length"))
    return Arc::centered(j.at("center").get<double>(), j.at("length").get<double>());
  throw ArgumentError("arc must be {\"start\", \"end\"} or {\"center\", \"length\"}");
}

CantorSpec parse_cantor(const json& j) {
  if (!j.is_object()) throw ArgumentError("cantor spec must be an object");
  CantorSpec spec;
  spec.rule = parse_length_rule(j.value("rule", std::string("ratio:l0=1,r=0.3333333333333333")));
  spec.depth = j.value("depth", 0);
  if (j.contains("host") && !(j.at("host").is_string() && j.at("host") == "full")) {
    const Arc host = parse_arc(j.at("host"));
    spec.host_start = host.start().radians();
    spec.host_length = host.length();
  }
  spec.fit_host = j.value("fit_host", false);
  std::optional<long> offset = 0;
  if (j.contains("offset")) {
    const json& o = j.at("offset");
    offset = o.is_string() ? parse_offset(o.get<std::string>()) : std::optional<long>(o.get<long>());
  }
  spec.offset = offset ? *offset : admissible_offset(spec.rule, spec.depth);
  return spec;
}

GridSet parse_set(const json& j, const CircleGrid& grid) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "full") return GridSet::full(grid);
      if (name == "half") return GridSet::cover(grid, Arc(Angle(0.0), Angle(kPi)));
      if (name == "empty") return GridSet::empty(grid);
      throw ArgumentError("unknown builtin set '" + name + "' (full, half, empty)");
    }
    if (!j.is_object() || j.size() != 1) throw ArgumentError("set must be a builtin name or a one-key object");
    if (j.contains("arcs")) {
      std::vector<Arc> arcs;
      for (const json& a : j.at("arcs")) arcs.push_back(parse_arc(a));
      return GridSet::cover(grid, ArcFamily(std::move(arcs)));
    }
    if (j.contains("cantor")) return GridSet::cover(grid, cantor_build(parse_cantor(j.at("cantor"))));
    if (j.contains("union")) {
      GridSet out = GridSet::empty(grid);
      for (const json& part : j.at("union")) out = out.unite(parse_set(part, grid));
      return out;
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("set: ") + e.what());
  }
  throw ArgumentError("set object needs one of arcs, cantor, union");
}

GridSet load_set(const std::string& arg, const CircleGrid& grid) { return parse_set(read_json_argument(arg), grid); }

namespace {

struct CsvSamples {
  std::vector<double> angles;
  std::vector<Complex> values;
};

CsvSamples read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open function file " + path);
  CsvSamples out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ',');
    if (out.angles.empty() && row == 1 && !fields.empty() && !fields[0].empty() &&
        std::isalpha(static_cast<unsigned char>(fields[0][0])))
      continue;  // header
    if (fields.size() < 2 || fields.size() > 3)
      throw ArgumentError(path + ":" + std::to_string(row) + ": expected angle,re[,im]");
    out.angles.push_back(parse_number(fields[0], "angle"));
    const double re = parse_number(fields[1], "re");
    const double im = fields.size() == 3 ? parse_number(fields[2], "im") : 0.0;
    out.values.emplace_back(re, im);
  }
  if (out.values.empty()) throw ArgumentError(path + ": no samples");
  return out;
}

}  // namespace

CircleGrid function_grid(const std::string& arg, std::size_t fallback_n) {
  if (arg.rfind("builtin:", 0) == 0) return CircleGrid(fallback_n);
  return CircleGrid(read_samples_csv(arg).values.size());
}

BoundarySamples load_function(const std::string& arg, const CircleGrid& grid, const GridSet* zero_set) {
  if (arg.rfind("builtin:", 0) == 0) {
    const std::string body = arg.substr(8);
    const auto comma = body.find(',');
    const std::string name = trim(body.substr(0, comma));
    const auto kv = parse_kv(comma == std::string::npos ? "" : body.substr(comma + 1));
    if (name == "monomial") {
      reject_unknown(kv, {"n"}, "monomial");
      return monomial(grid, kv.count("n") ? parse_integer(kv.at("n"), "n") : 1);
    }
    if (name == "trigpoly") {
      reject_unknown(kv, {"seed", "degree"}, "trigpoly");
      const long seed = kv.count("seed") ? parse_integer(kv.at("seed"), "seed") : 1;
      const long degree = kv.count("degree") ? parse_integer(kv.at("degree"), "degree") : 6;
      if (seed < 0) throw ArgumentError("trigpoly seed must be nonnegative");
      return trig_polynomial(grid, static_cast<std::uint64_t>(seed), static_cast<int>(degree));
    }
    if (name == "spike") {
      reject_unknown(kv, {"delta"}, "spike");
      if (!zero_set) throw ArgumentError("the spike builtin needs a set (--set)");
      return spike_function(*zero_set, parse_number(require(kv, "delta", "spike"), "delta"));
    }
    if (name == "sawtooth") {
      reject_unknown(kv, {}, "sawtooth");
      return sawtooth(grid);
    }
    if (name == "const") {
      reject_unknown(kv, {"value", "im"}, "const");
      const double re = kv.count("value") ? parse_number(kv.at("value"), "value") : 1.0;
      const double im = kv.count("im") ? parse_number(kv.at("im"), "im") : 0.0;
      return BoundarySamples::constant(grid, Complex(re, im));
    }
    throw ArgumentError("unknown builtin function '" + name + "' (monomial, trigpoly, spike, sawtooth, const)");
  }
  CsvSamples csv = read_samples_csv(arg);
  if (csv.values.size() != grid.size())
    throw ArgumentError("function file has " + std::to_string(csv.values.size()) + " samples, grid has " +
                        std::to_string(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (std::abs(Angle::normalize(csv.angles[j]) - grid.angle(j)) > 1e-9)
      throw ArgumentError("function file row " + std::to_string(j + 1) + ": angle is not the grid point t_j");
  }
  return BoundarySamples(grid, std::move(csv.values));
}

json to_json(const Arc& arc) { return {{"start", arc.start().radians()}, {"end", arc.end().radians()}}; }

json to_json(const ArcFamily& family) {
  json arcs = json::array();
  for (const Arc& a : family.arcs()) arcs.push_back(to_json(a));
  return {{"arcs", arcs}, {"disjoint", family.pairwise_disjoint()}};
}

json to_json(const CapacityEstimate& c) {
  json j = {{"capacity", c.value},
            {"method", to_string(c.method)},
            {"alpha", c.alpha},
            {"kernel_exponent", c.kernel_exponent},
            {"grid_n", c.grid_n},
            {"iterations", c.iterations},
            {"polish_rounds", c.polish_rounds},
            {"kkt_residual", c.kkt_residual},
            {"energy_or_norm", c.energy_or_norm},
            {"nonconvex_kernel", c.nonconvex_kernel}};
  if (c.method == CapacityMethod::l2) j["min_constraint"] = c.min_constraint;
  return j;
}

json to_json(const PoincareReport& r) {
  return {{"lhs", r.lhs},
          {"cap", r.cap},
          {"energy", r.energy},
          {"scale", r.scale},
          {"ratio", r.ratio},
          {"params", {{"alpha", r.params.alpha}, {"beta", r.params.beta}, {"gamma", r.params.gamma}, {"grid_n", r.grid_n}}},
          {"arc_length", r.arc_length},
          {"zero_cells", r.zero_cells},
          {"cap_iterations", r.cap_iterations},
          {"cap_kkt_residual", r.cap_kkt_residual}};
}

json to_json(const SeriesDiagnostic& d) {
  json points = json::array();
  for (std::size_t c : d.checkpoints) points.push_back({c, d.partial_sums[c - 1]});
  json j = {{"trend", to_string(d.trend)},
            {"n_terms", d.terms.size()},
            {"partial_sum", d.partial_sums.empty() ? 0.0 : d.partial_sums.back()},
            {"checkpoints", points},
            {"fit",
             {{"model", d.fit.model},
              {"coefficient", d.fit.coefficient},
              {"intercept", d.fit.intercept},
              {"exponent", d.fit.exponent},
              {"r_squared", d.fit.r_squared},
              {"t_statistic", std::isfinite(d.fit.t_statistic) ? json(d.fit.t_statistic) : json("inf")}}},
            {"zero_capacity", d.zero_capacity}};
  j["limit"] = d.limit ? json(*d.limit) : json(nullptr);
  return j;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  out << std::setprecision(17);
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
    out << '\n';
  }
}

}  // namespace circpot::io

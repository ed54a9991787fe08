#pragma once

// Configuration, set and function ingestion, JSON and CSV emission for the
// command-line front end.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circpot/capacity.hpp"
#include "circpot/circle.hpp"
#include "circpot/poincare.hpp"
#include "circpot/samples.hpp"
#include "circpot/uniqueness.hpp"

namespace circpot::io {

using nlohmann::json;

struct Config {
  std::size_t grid_n = 4096;
  std::size_t fourier_m = 0;  // 0 means grid_n / 4
  SolverConfig solver;
  std::uint64_t seed = 1;
  bool emit_json = true;
  std::string csv_path;

  std::size_t truncation() const { return fourier_m == 0 ? grid_n / 4 : fourier_m; }
  void validate() const;
};

Config load_config(const std::string& path);
void apply_config_json(Config& cfg, const json& j);

// "a=1,b=x" -> {a: "1", b: "x"}. Keys must be unique.
std::map<std::string, std::string> parse_kv(const std::string& text);
double parse_number(const std::string& text, const std::string& what);

LengthRule parse_length_rule(const std::string& text);
// "auto" -> nullopt.
std::optional<long> parse_offset(const std::string& text);

// Literal JSON text or a path to a JSON file.
json read_json_argument(const std::string& arg);

Arc parse_arc(const json& j);
// {"arcs": [...]}, {"cantor": {...}}, {"union": [...]}, "full", "half".
GridSet parse_set(const json& j, const CircleGrid& grid);
GridSet load_set(const std::string& arg, const CircleGrid& grid);
CantorSpec parse_cantor(const json& j);

// Grid implied by a function argument: the row count of a CSV file, or the
// configured size for builtins.
CircleGrid function_grid(const std::string& arg, std::size_t fallback_n);
// "builtin:monomial,n=1", "builtin:trigpoly,seed=3,degree=5",
// "builtin:spike,delta=0.1", "builtin:sawtooth", "builtin:const,value=2", or a CSV of
// angle,re,im rows on the grid.
BoundarySamples load_function(const std::string& arg, const CircleGrid& grid, const GridSet* zero_set);

json to_json(const Arc& arc);
json to_json(const ArcFamily& family);
json to_json(const CapacityEstimate& c);
json to_json(const PoincareReport& r);
json to_json(const SeriesDiagnostic& d);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace circpot::io

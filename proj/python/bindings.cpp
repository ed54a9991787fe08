#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circpot/capacity.hpp"
#include "circpot/energy.hpp"
#include "circpot/errors.hpp"
#include "circpot/extension.hpp"
#include "circpot/functions.hpp"
#include "circpot/poincare.hpp"
#include "circpot/uniqueness.hpp"
#include "suite.hpp"

namespace py = pybind11;
using namespace circpot;

namespace {

BoundarySamples samples_from(const CircleGrid& grid, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 1 || static_cast<std::size_t>(values.shape(0)) != grid.size())
    throw ArgumentError("samples must be a 1-d array with one value per grid point");
  const auto* p = values.data();
  return BoundarySamples(grid, std::vector<Complex>(p, p + grid.size()));
}

py::array_t<std::complex<double>> to_array(const BoundarySamples& f) {
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(f.size()), f.values().data());
}

GridSet mask_set(const CircleGrid& grid, py::array_t<bool, py::array::c_style | py::array::forcecast> mask) {
  if (mask.ndim() != 1 || static_cast<std::size_t>(mask.shape(0)) != grid.size())
    throw ArgumentError("mask must be a 1-d array with one entry per grid point");
  std::vector<std::uint8_t> m(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) m[k] = mask.data()[k] ? 1 : 0;
  return GridSet(grid, std::move(m));
}

py::dict series_dict(const SeriesDiagnostic& d) {
  py::dict out;
  out["terms"] = d.terms;
  out["partial_sums"] = d.partial_sums;
  out["trend"] = to_string(d.trend);
  out["model"] = d.fit.model;
  out["coefficient"] = d.fit.coefficient;
  out["exponent"] = d.fit.exponent;
  out["r_squared"] = d.fit.r_squared;
  out["limit"] = d.limit ? py::object(py::float_(*d.limit)) : py::object(py::none());
  out["zero_capacity"] = d.zero_capacity;
  return out;
}

py::dict capacity_dict(const CapacityEstimate& c) {
  py::dict out;
  out["value"] = c.value;
  out["method"] = to_string(c.method);
  out["alpha"] = c.alpha;
  out["kernel_exponent"] = c.kernel_exponent;
  out["grid_n"] = c.grid_n;
  out["iterations"] = c.iterations;
  out["kkt_residual"] = c.kkt_residual;
  out["energy_or_norm"] = c.energy_or_norm;
  if (c.measure) out["weights"] = c.measure->weights();
  return out;
}

SolverConfig solver(double tolerance, int max_iterations, const std::string& step) {
  SolverConfig cfg;
  cfg.tolerance = tolerance;
  cfg.max_iterations = max_iterations;
  cfg.step_rule = parse_step_rule(step);
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional energies and capacities on the unit circle";

  auto base = py::register_exception<Error>(m, "Error");
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", pre.ptr());

  py::class_<CircleGrid>(m, "Grid")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("size", &CircleGrid::size)
      .def_property_readonly("cell_width", &CircleGrid::cell_width)
      .def("angles", [](const CircleGrid& g) { return py::array_t<double>(py::cast(g.angles())); })
      .def("arc_mask", [](const CircleGrid& g, double start, double end, bool cover) {
             const Arc arc{Angle(start), Angle(end)};
             const GridSet s = cover ? GridSet::cover(g, arc) : GridSet::interior(g, arc);
             py::array_t<bool> out(static_cast<py::ssize_t>(g.size()));
             for (std::size_t k = 0; k < g.size(); ++k) out.mutable_data()[k] = s.contains(k);
             return out;
           },
           py::arg("start"), py::arg("end"), py::arg("cover") = true)
      .def("__repr__", [](const CircleGrid& g) { return "Grid(" + std::to_string(g.size()) + ")"; });

  m.def("monomial", [](const CircleGrid& g, long n) { return to_array(monomial(g, n)); }, py::arg("grid"), py::arg("n"));
  m.def("trig_polynomial", [](const CircleGrid& g, std::uint64_t seed, int degree) {
        return to_array(trig_polynomial(g, seed, degree));
      },
      py::arg("grid"), py::arg("seed"), py::arg("degree"));

  m.def("dirichlet_energy", [](const CircleGrid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> f, double alpha) {
        return dirichlet_energy_global(samples_from(g, f), alpha);
      },
      py::arg("grid"), py::arg("f"), py::arg("alpha"));
  m.def("local_energy", [](const CircleGrid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> f,
                           std::pair<double, double> i, std::pair<double, double> j, double alpha) {
        return dirichlet_energy_local(samples_from(g, f), Arc(Angle(i.first), Angle(i.second)),
                                      Arc(Angle(j.first), Angle(j.second)), alpha);
      },
      py::arg("grid"), py::arg("f"), py::arg("arc_i"), py::arg("arc_j"), py::arg("alpha"));
  m.def("energy_weight", &energy_weight, py::arg("n"), py::arg("alpha"));
  m.def("kernel", &kernel_k, py::arg("alpha"), py::arg("chord"));

  m.def("classical_capacity", [](const CircleGrid& g, py::array_t<bool, py::array::c_style | py::array::forcecast> mask, double alpha,
                                 double tol, int iters, const std::string& step) {
        return capacity_dict(classical_capacity(mask_set(g, mask), alpha, solver(tol, iters, step)));
      },
      py::arg("grid"), py::arg("mask"), py::arg("alpha"), py::arg("tolerance") = 1e-8, py::arg("max_iterations") = 50000,
      py::arg("step_rule") = "frank_wolfe");
  m.def("l2_capacity", [](const CircleGrid& g, py::array_t<bool, py::array::c_style | py::array::forcecast> mask, double alpha,
                          double tol, int iters, const std::string& step) {
        return capacity_dict(l2_capacity(mask_set(g, mask), alpha, solver(tol, iters, step)));
      },
      py::arg("grid"), py::arg("mask"), py::arg("alpha"), py::arg("tolerance") = 1e-8, py::arg("max_iterations") = 50000,
      py::arg("step_rule") = "frank_wolfe");

  m.def("extension_ratio", [](const CircleGrid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> f,
                              double theta, double gamma, double alpha) {
        const ExtensionRatio r = extension_ratio(samples_from(g, f), ExtensionSetup(theta, gamma), alpha);
        return py::dict(py::arg("d_i") = r.d_i, py::arg("d_j") = r.d_j, py::arg("ratio") = r.ratio);
      },
      py::arg("grid"), py::arg("f"), py::arg("theta"), py::arg("gamma"), py::arg("alpha"));
  m.def("extend", [](const CircleGrid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> f, double theta,
                     double gamma) { return to_array(extend(samples_from(g, f), ExtensionSetup(theta, gamma))); },
        py::arg("grid"), py::arg("f"), py::arg("theta"), py::arg("gamma"));

  m.def("spike", [](const CircleGrid& g, py::array_t<bool, py::array::c_style | py::array::forcecast> zero_mask, double delta) {
        return to_array(spike_function(mask_set(g, zero_mask), delta));
      },
      py::arg("grid"), py::arg("zero_mask"), py::arg("delta"));
  m.def("poincare_check", [](const CircleGrid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> f,
                             py::array_t<bool, py::array::c_style | py::array::forcecast> zero_mask, std::pair<double, double> arc,
                             double alpha, double beta, double gamma) {
        PoincareParams p;
        p.alpha = alpha;
        p.beta = beta;
        p.gamma = gamma;
        const PoincareReport r = poincare_check(samples_from(g, f), mask_set(g, zero_mask), Arc(Angle(arc.first), Angle(arc.second)), p);
        return py::dict(py::arg("lhs") = r.lhs, py::arg("cap") = r.cap, py::arg("energy") = r.energy, py::arg("scale") = r.scale,
                        py::arg("ratio") = r.ratio, py::arg("zero_cells") = r.zero_cells);
      },
      py::arg("grid"), py::arg("f"), py::arg("zero_mask"), py::arg("arc"), py::arg("alpha") = 1.0, py::arg("beta") = 0.5,
      py::arg("gamma") = 0.5);

  m.def("cantor_arcs", [](const std::string& rule, double beta, double l0, double r, int depth, std::optional<long> offset) {
        CantorSpec spec;
        spec.rule = rule == "power" ? LengthRule::power(beta) : LengthRule::ratio(l0, r);
        spec.depth = depth;
        spec.offset = offset ? *offset : admissible_offset(spec.rule, depth);
        std::vector<std::pair<double, double>> out;
        const ArcFamily fam = cantor_build(spec);
        for (const Arc& a : fam.arcs()) out.emplace_back(a.start().radians(), a.length());
        return out;
      },
      py::arg("rule") = "ratio", py::arg("beta") = 0.5, py::arg("l0") = 1.0, py::arg("r") = 1.0 / 3.0, py::arg("depth") = 0,
      py::arg("offset") = py::none());
  m.def("cantor_capacity_series", [](double beta, double s, std::size_t n) {
        return series_dict(cantor_capacity_series(LengthRule::power(beta), s, n));
      },
      py::arg("beta"), py::arg("s"), py::arg("n"));
  m.def("carleson_sum", [](std::vector<double> lengths, std::size_t n) { return series_dict(carleson_sum(std::move(lengths), n)); },
        py::arg("lengths"), py::arg("n"));
  m.def("example_arc_lengths", [](std::size_t n_max) {
        std::vector<double> out;
        const ArcFamily fam = paper_example_arcs(n_max);
        for (const Arc& a : fam.arcs()) out.push_back(a.length());
        return out;
      },
      py::arg("n_max"));
  m.def("diagnose_series", [](std::vector<double> terms) { return series_dict(diagnose_series(std::move(terms))); },
        py::arg("terms"));

  m.def("selftest", [](std::size_t grid_n, std::uint64_t seed) {
        acceptance::Options opt;
        opt.grid_n = grid_n;
        opt.seed = seed;
        std::vector<acceptance::Criterion> results;
        {
          py::gil_scoped_release release;
          results = acceptance::run_suite(opt);
        }
        py::list out;
        for (const auto& c : results) out.append(py::dict(py::arg("id") = c.id, py::arg("name") = c.name, py::arg("pass") = c.pass,
                                                          py::arg("detail") = c.detail));
        return out;
      },
      py::arg("grid_n") = 4096, py::arg("seed") = 1);
}

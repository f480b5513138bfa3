#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ipctp/derived.hpp"
#include "ipctp/error.hpp"
#include "ipctp/gantt.hpp"
#include "ipctp/generator.hpp"
#include "ipctp/mip_export.hpp"
#include "ipctp/oracle.hpp"
#include "ipctp/schedule.hpp"
#include "ipctp/solver.hpp"
#include "ipctp/validate.hpp"

namespace py = pybind11;
using namespace ipctp;

namespace {

// Solutions cross the boundary as their JSON text; the Python layer decodes.
std::pair<std::string, std::optional<std::string>> solve_json(const Instance& inst, double time_limit, int workers,
                                                              std::uint64_t seed) {
  SolveResult r;
  {
    py::gil_scoped_release release;
    const auto d = build_derived(inst);
    r = solve(inst, d, SolveParams{time_limit, workers, seed});
  }
  std::optional<std::string> sol;
  if (r.solution) sol = solution_to_json(*r.solution);
  return {report_to_json(r.report), sol};
}

std::string oracle_json(const Instance& inst, std::uint64_t limit, int workers) {
  py::gil_scoped_release release;
  const auto d = build_derived(inst);
  OracleOptions o;
  o.limit = limit;
  o.workers = workers;
  return solution_to_json(brute_force(inst, d, o).best_solution);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the ipctp package";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InstanceInvalid>(m, "InstanceInvalid", base.ptr());
  py::register_exception<NoEligibleCrane>(m, "NoEligibleCrane", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<InvalidDecisions>(m, "InvalidDecisions", base.ptr());
  py::register_exception<CyclicOrdering>(m, "CyclicOrdering", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NoFeasibleSolution>(m, "NoFeasibleSolution", base.ptr());
  py::register_exception<ConfigInvalid>(m, "ConfigInvalid", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", &instance_from_json, py::arg("text"))
      .def_static("load", &load_instance, py::arg("path"))
      .def("to_json", &instance_to_json)
      .def("save", [](const Instance& i, const std::string& path) { save_instance(i, path); }, py::arg("path"))
      .def_property_readonly("shipment_count", &Instance::shipment_count)
      .def_property_readonly("vessel_count", &Instance::vessel_count)
      .def_property_readonly("location_count", &Instance::location_count)
      .def_property_readonly("qc_count", &Instance::qc_count)
      .def_property_readonly("yc_count", &Instance::yc_count)
      .def_property_readonly("inbound", &Instance::inbound)
      .def_property_readonly("outbound", &Instance::outbound)
      .def_property_readonly("available_locations", &Instance::available_locations)
      .def("__repr__", [](const Instance& i) {
        return "<Instance shipments=" + std::to_string(i.shipment_count()) + " qcs=" + std::to_string(i.qc_count()) +
               " ycs=" + std::to_string(i.yc_count()) + ">";
      });

  m.def(
      "generate",
      [](int shipments, int bays, double inbound_ratio, int ul_ratio, int vessels, std::uint64_t seed) {
        GenConfig c;
        c.shipments = shipments;
        c.bays = bays;
        c.inbound_ratio = inbound_ratio;
        c.ul_ratio = ul_ratio;
        c.vessels = vessels;
        c.seed = seed;
        return generate(c);
      },
      py::arg("shipments") = 5, py::arg("bays") = 4, py::arg("inbound_ratio") = 0.2, py::arg("ul_ratio") = 2,
      py::arg("vessels") = 1, py::arg("seed") = 0);

  m.def("solve", &solve_json, py::arg("instance"), py::arg("time_limit") = 600.0, py::arg("workers") = 1,
        py::arg("seed") = 0);
  m.def("oracle", &oracle_json, py::arg("instance"), py::arg("limit") = 200'000'000, py::arg("workers") = 1);
  m.def(
      "validate",
      [](const Instance& inst, const std::string& solution) {
        return violations_to_json(validate(inst, build_derived(inst), solution_from_json(solution)));
      },
      py::arg("instance"), py::arg("solution"));
  m.def(
      "export_lp",
      [](const Instance& inst, std::optional<std::int64_t> big_m) {
        MipOptions o;
        o.big_m = big_m;
        const auto model = build_mip(inst, build_derived(inst), o);
        return std::make_pair(mip_to_lp(model), mip_mapping_json(model));
      },
      py::arg("instance"), py::arg("big_m") = py::none());
  m.def(
      "import_mip",
      [](const Instance& inst, const std::string& values, std::optional<std::int64_t> big_m) {
        MipOptions o;
        o.big_m = big_m;
        const auto d = build_derived(inst);
        const auto model = build_mip(inst, d, o);
        return solution_to_json(solution_from_mip_values(inst, d, model, parse_mip_values(values)));
      },
      py::arg("instance"), py::arg("values"), py::arg("big_m") = py::none());
  m.def(
      "gantt",
      [](const Instance& inst, const std::string& solution, int width) {
        return gantt_text(inst, solution_from_json(solution), width);
      },
      py::arg("instance"), py::arg("solution"), py::arg("width") = 80);
}

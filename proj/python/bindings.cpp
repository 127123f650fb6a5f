#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "framecraft.hpp"

namespace py = pybind11;
using namespace framecraft;

namespace {

IrrepTable table_for(const std::string& spec, const std::string& basis) {
  return builtin_irrep_table(spec, basis == "real" ? Basis::Real : Basis::Complex);
}

py::dict named_blocks(const std::vector<CMatrix>& blocks, const IrrepTable& table) {
  py::dict out;
  for (int p = 0; p < table.size(); ++p) out[py::str(table.name(p))] = blocks[p];
  return out;
}

py::object bounds(const std::optional<Bounds>& b) {
  if (!b) return py::none();
  return py::make_tuple(b->first, b->second);
}

}  // namespace

PYBIND11_MODULE(_framecraft, m) {
  m.doc() = "Group frames of finite groups";

  py::register_exception<Error>(m, "FramecraftError");

  m.def("irreps", [](const std::string& spec, const std::string& basis) {
    const auto table = table_for(spec, basis);
    py::dict out;
    for (int p = 0; p < table.size(); ++p) out[py::str(table.name(p))] = table.irrep(p).matrices();
    return out;
  }, py::arg("group"), py::arg("basis") = "complex");

  m.def("fourier", [](const std::string& spec, const CVector& values, const std::string& basis) {
    const auto table = table_for(spec, basis);
    return named_blocks(fourier(GroupFunction{table.group(), values}, table).blocks, table);
  }, py::arg("group"), py::arg("values"), py::arg("basis") = "complex");

  m.def("bracket", [](const std::string& spec, const std::vector<CMatrix>& matrices, const CVector& f,
                      std::optional<CVector> g) {
    const auto table = table_for(spec, "complex");
    const UnitaryRep rep(table.group(), matrices);
    return named_blocks(bracket(rep, f, g ? *g : f, table).blocks, table);
  }, py::arg("group"), py::arg("matrices"), py::arg("f"), py::arg("g") = py::none());

  m.def("frame_report", [](const std::string& spec, const std::vector<CMatrix>& matrices, const CVector& f) {
    const auto table = table_for(spec, "complex");
    const auto r = frame_bounds_single(UnitaryRep(table.group(), matrices), f, table);
    py::dict out;
    out["span_dim"] = r.span_dim;
    out["is_tight"] = r.is_tight;
    out["is_parseval"] = r.is_parseval_continuous;
    out["continuous_bounds"] = bounds(r.continuous_bounds);
    out["discrete_bounds"] = bounds(r.discrete_bounds);
    return out;
  }, py::arg("group"), py::arg("matrices"), py::arg("f"));

  m.def("harmonic_frame", [](const std::string& spec, const std::vector<int>& ranks, const std::string& basis) {
    return harmonic_frame(table_for(spec, basis), ranks).vectors;
  }, py::arg("group"), py::arg("ranks"), py::arg("basis") = "complex");

  m.def("parseval_generator", [](const std::string& spec, const std::vector<int>& ranks) {
    return parseval_generator(table_for(spec, "complex"), ranks).values;
  }, py::arg("group"), py::arg("ranks"));

  m.def("permutation_frame_generator", [](int n, std::optional<CVector> psi) {
    return permutation_frame_generator(n, psi);
  }, py::arg("n"), py::arg("psi") = py::none());

  m.def("is_tight_permutation_frame", [](int n, const CVector& f) {
    return two_transitive_tightness(symmetric_natural_action(n), f).tight;
  }, py::arg("n"), py::arg("f"));

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "framecraft");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xychain/propagator.hpp"
#include "xychain/pulse.hpp"
#include "xychain/transfer.hpp"
#include "xychain/verify.hpp"

namespace py = pybind11;
using namespace xychain;

namespace {

Axis parse_axis(const std::string& s) { return axis_from_string(s); }

SignVariant parse_sign(const std::string& s) {
  if (s == "plus") return SignVariant::Plus;
  if (s == "minus") return SignVariant::Minus;
  throw std::invalid_argument("sign must be 'plus' or 'minus'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum state transfer in a three-qubit chain with a tunable "
            "three-spin interaction";

  m.attr("T0") = kT0;

  py::class_<ChainParams>(m, "ChainParams")
      .def(py::init<double>(), py::arg("lam"))
      .def_readwrite("lam", &ChainParams::lambda)
      .def_property_readonly("k", &ChainParams::k)
      .def("__repr__", [](const ChainParams& p) {
        return "ChainParams(lam=" + std::to_string(p.lambda) + ")";
      });

  py::class_<NmrParams>(m, "NmrParams")
      .def(py::init<>())
      .def_static("tce", &NmrParams::tce)
      .def_static("from_json_file", &NmrParams::from_json_file)
      .def_static("from_json_text", &NmrParams::from_json_text)
      .def_readwrite("nu1", &NmrParams::nu1)
      .def_readwrite("nu2", &NmrParams::nu2)
      .def_readwrite("nu3", &NmrParams::nu3)
      .def_readwrite("j12", &NmrParams::j12)
      .def_readwrite("j23", &NmrParams::j23)
      .def_readwrite("j13", &NmrParams::j13)
      .def_readwrite("delta_nu13", &NmrParams::delta_nu13);

  py::class_<TransferTimes>(m, "TransferTimes")
      .def_readonly("t_3to1", &TransferTimes::t_3to1)
      .def_readonly("t_1to3", &TransferTimes::t_1to3)
      .def_readonly("period", &TransferTimes::period)
      .def_readonly("t0", &TransferTimes::t0);

  m.def("kron", &kron);
  m.def("expm_hermitian_generator", &expm_hermitian_generator, py::arg("h"), py::arg("t"));
  m.def("dist_up_to_global_phase", &dist_up_to_global_phase);

  m.def("pauli_at", [](int site, const std::string& axis) {
    return pauli_at(site, parse_axis(axis));
  }, py::arg("site"), py::arg("axis"));
  m.def("build_h_xy3", [](double lam) { return build_h_xy3({lam}); }, py::arg("lam"));
  m.def("build_c", [](double lam) { return build_c({lam}); }, py::arg("lam"));
  m.def("build_d", [](double lam) { return build_d({lam}); }, py::arg("lam"));
  m.def("build_h_nmr_weak", &build_h_nmr_weak);
  m.def("build_h_nmr_strong", &build_h_nmr_strong);

  m.def("propagate_analytic", [](double lam, double t) {
    return propagate_analytic({lam}, t);
  }, py::arg("lam"), py::arg("t"));
  m.def("transfer_times", [](double lam) { return transfer_times({lam}); }, py::arg("lam"));
  m.def("transfer_propagator", [](double lam, const std::string& dir) {
    if (dir == "1to3") return transfer_propagator({lam}, Direction::OneToThree);
    if (dir == "3to1") return transfer_propagator({lam}, Direction::ThreeToOne);
    throw std::invalid_argument("direction must be '1to3' or '3to1'");
  }, py::arg("lam"), py::arg("direction"));
  m.def("find_speedup_threshold", &find_speedup_threshold);
  m.def("swap_13", &swap_13);

  m.def("evolve_pure", [](double lam, Complex alpha, Complex beta, int spectators, double t) {
    return evolve_pure({lam}, {alpha, beta, spectators}, t);
  }, py::arg("lam"), py::arg("alpha"), py::arg("beta"), py::arg("spectator_bits"), py::arg("t"));

  m.def("evolve_deviation", [](double lam, const std::string& axis, int site, double t) {
    return evolve_deviation({lam}, {parse_axis(axis), site}, t).matrix;
  }, py::arg("lam"), py::arg("axis"), py::arg("site"), py::arg("t"));

  m.def("overlap_trace", [](double lam, const std::string& axis, const std::vector<double>& grid) {
    const TransferReport rep = overlap_trace({lam}, parse_axis(axis), grid);
    py::list rows;
    for (const TraceRow& r : rep.trace)
      rows.append(py::make_tuple(r.t, r.c_source, r.c_middle, r.c_target));
    py::dict d;
    d["lambda"] = rep.lambda;
    d["rows"] = rows;
    d["peak_target_t"] = rep.trace[rep.peak_target_row].t;
    d["peak_return_t"] = rep.trace[rep.peak_return_row].t;
    return d;
  }, py::arg("lam"), py::arg("axis"), py::arg("t_grid"));

  m.def("bell_transfer", [](double lam) {
    py::list out;
    for (const auto& rec : bell_transfer({lam})) {
      py::dict d;
      d["input"] = rec.input;
      d["output"] = rec.output;
      d["phase"] = rec.phase;
      out.append(d);
    }
    return out;
  }, py::arg("lam"));

  py::class_<PulseSequence>(m, "PulseSequence")
      .def_property_readonly("num_ops", [](const PulseSequence& s) { return s.ops.size(); })
      .def_readonly("t", &PulseSequence::t)
      .def_readonly("lam", &PulseSequence::lambda)
      .def("to_text", &sequence_to_text)
      .def("to_json", &sequence_to_json_text);

  m.def("compile_uc", [](double lam, double t, const std::string& sign) {
    return compile_uc({lam}, t, parse_sign(sign));
  }, py::arg("lam"), py::arg("t"), py::arg("sign") = "plus");
  m.def("compile_ud", [](double lam, double t, const std::string& sign) {
    return compile_ud({lam}, t, parse_sign(sign));
  }, py::arg("lam"), py::arg("t"), py::arg("sign") = "plus");
  m.def("concatenate", &concatenate, py::arg("uc"), py::arg("ud"), py::arg("fuse") = true);
  m.def("lower_sequence", &lower_sequence);
  m.def("simulate_sequence", &simulate_sequence);

  m.def("estimate_duration", [](const PulseSequence& seq, const NmrParams& nmr) {
    const DurationEstimate est = estimate_duration(seq, nmr);
    py::dict d;
    d["d1"] = est.d1; d["d2"] = est.d2; d["d3"] = est.d3;
    d["d4"] = est.d4; d["d5"] = est.d5; d["d6"] = est.d6;
    d["total_seconds"] = est.total;
    return d;
  }, py::arg("seq"), py::arg("nmr"));

  m.def("run_verification", []() {
    py::list out;
    for (const CheckResult& r : run_verification()) {
      py::dict d;
      d["name"] = r.name;
      d["distance"] = r.distance;
      d["tolerance"] = r.tolerance;
      d["pass"] = r.pass;
      out.append(d);
    }
    return out;
  });
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ebitsim/config.hpp"
#include "ebitsim/entanglement.hpp"
#include "ebitsim/etpd.hpp"
#include "ebitsim/netlist.hpp"
#include "ebitsim/postselect.hpp"
#include "ebitsim/protocols.hpp"
#include "ebitsim/report_io.hpp"

namespace py = pybind11;
using namespace ebitsim;

namespace {

py::dict report_dict(const SchmidtReport& r) {
  py::dict d;
  d["singular_values"] = r.singular_values;
  d["lambda"] = r.schmidt_coefficients;
  d["entropy_ebits"] = r.entropy_ebits;
  d["rank"] = r.numerical_rank;
  return d;
}

PhotonEnsemble make_ensemble(const ComplexMatrix& amplitudes, std::pair<int, int> atomic_rows,
                             const std::optional<ComplexMatrix>& transfer) {
  PhotonEnsemble ens(amplitudes, atomic_rows);
  if (transfer) ens = apply_network_to_ensemble(ens, LinearNetwork(*transfer));
  return ens;
}

}  // namespace

PYBIND11_MODULE(_ebitsim, m) {
  m.doc() = "Two-atom entanglement from post-selected photon coincidences";

  py::register_exception<Error>(m, "EbitsimError", PyExc_ValueError);

  m.def("permanent", &permanent, py::arg("m"), "Ryser permanent of a square complex matrix");
  m.def("permanent_bruteforce", &permanent_bruteforce, py::arg("m"));

  m.def("symmetric_collector_unitary", &symmetric_collector_unitary, py::arg("n"));
  m.def(
      "reck_decompose_json",
      [](const ComplexMatrix& u) { return dump_json(netlist_to_json(reck_decompose(u)), 0); },
      py::arg("u"));
  m.def(
      "compose_json",
      [](const std::string& netlist, int ports) {
        return compose(parse_netlist(netlist), PortBasis(ports)).transfer();
      },
      py::arg("netlist"), py::arg("ports"));

  m.def(
      "coincidence_project",
      [](const ComplexMatrix& amplitudes, std::pair<int, int> atomic_rows,
         std::optional<ComplexMatrix> transfer) {
        return coincidence_project(make_ensemble(amplitudes, atomic_rows, transfer)).matrix;
      },
      py::arg("amplitudes"), py::arg("atomic_rows") = std::pair<int, int>{0, 1},
      py::arg("transfer") = py::none(),
      "Unnormalized atomic amplitude after an N-fold coincidence; `transfer` is applied first");
  m.def(
      "coincidence_project_bruteforce",
      [](const ComplexMatrix& amplitudes, std::pair<int, int> atomic_rows,
         std::optional<ComplexMatrix> transfer) {
        return coincidence_project_bruteforce(make_ensemble(amplitudes, atomic_rows, transfer)).matrix;
      },
      py::arg("amplitudes"), py::arg("atomic_rows") = std::pair<int, int>{0, 1},
      py::arg("transfer") = py::none());
  m.def(
      "single_detection_state",
      [](const ComplexVector& psi1, const ComplexVector& psi2, Complex w1, Complex w2) {
        return single_detection_state(psi1, psi2, w1, w2).matrix;
      },
      py::arg("psi1"), py::arg("psi2"), py::arg("w1") = Complex{1.0}, py::arg("w2") = Complex{1.0});

  m.def(
      "schmidt", [](const ComplexMatrix& c) { return report_dict(schmidt(c)); }, py::arg("c"));
  m.def(
      "max_entangle_local_filter",
      [](const ComplexMatrix& c) {
        const auto r = max_entangle_local_filter(BipartiteAmplitude{c, false});
        py::dict d;
        d["filter"] = r.filter;
        d["entropy_ebits"] = r.entropy_ebits;
        d["success_penalty"] = r.success_penalty;
        return d;
      },
      py::arg("c"));

  m.def(
      "gaussian_schmidt_oracle",
      [](double sigma, double delta) { return report_dict(gaussian_schmidt_oracle(sigma, delta)); },
      py::arg("sigma"), py::arg("delta"));
  m.def(
      "entanglement_vs_width_sweep",
      [](const std::vector<double>& ratios, int points) {
        py::list rows;
        for (const auto& r : entanglement_vs_width_sweep(ratios, points).rows) {
          py::dict d;
          d["ratio"] = r.ratio;
          d["entropy_ebits"] = r.entropy_ebits;
          d["oracle_entropy_ebits"] = r.oracle_entropy_ebits;
          d["rel_err"] = r.rel_err;
          rows.append(d);
        }
        return rows;
      },
      py::arg("sigma_over_delta"), py::arg("points") = kDefaultGridPoints);

  m.def(
      "run_protocol_json",
      [](const std::string& protocol) {
        const ProtocolSpec spec = parse_protocol(nlohmann::json::parse(protocol));
        return dump_json(result_to_json(run_protocol(spec), spec.seed), 0);
      },
      py::arg("protocol"), "Run one protocol given its JSON description; returns the result JSON");
}

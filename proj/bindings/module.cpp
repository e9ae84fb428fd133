#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "hamlim/eigh.hpp"
#include "hamlim/experiments.hpp"
#include "hamlim/graph.hpp"
#include "hamlim/instances.hpp"
#include "hamlim/norms.hpp"
#include "hamlim/stochastic.hpp"

namespace py = pybind11;
using namespace hamlim;

namespace {

std::vector<std::vector<cplx>> rows_of(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = h(i, j);
  }
  return rows;
}

std::vector<std::vector<cplx>> rows_of(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

HermitianMatrix matrix_from_rows(const std::vector<std::vector<cplx>>& rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("matrix rows must form a square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return HermitianMatrix::from_entries(n, std::move(entries));
}

BitString bits_from(const std::variant<std::string, std::vector<int>>& value) {
  if (std::holds_alternative<std::string>(value)) {
    return parse_bit_string(std::get<std::string>(value));
  }
  BitString s;
  for (int b : std::get<std::vector<int>>(value)) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    s.bits.push_back(static_cast<std::uint8_t>(b));
  }
  if (s.bits.empty()) throw std::invalid_argument("bit string must be nonempty");
  return s;
}

SignString signs_from(const std::variant<std::string, std::vector<int>>& value) {
  if (std::holds_alternative<std::string>(value)) {
    return parse_sign_string(std::get<std::string>(value));
  }
  SignString s;
  for (int v : std::get<std::vector<int>>(value)) {
    if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
    s.signs.push_back(v);
  }
  if (s.signs.empty()) throw std::invalid_argument("sign string must be nonempty");
  return s;
}

using StrOrInts = std::variant<std::string, std::vector<int>>;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Norm hierarchies, hard instances, and structured simulations for "
            "Hermitian Hamiltonians";

  py::class_<HermitianMatrix>(m, "HermitianMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_property_readonly("dim", &HermitianMatrix::dim)
      .def("to_rows", [](const HermitianMatrix& h) { return rows_of(h); })
      .def("__getitem__",
           [](const HermitianMatrix& h, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= h.dim() || ij.second >= h.dim()) throw py::index_error();
             return h(ij.first, ij.second);
           })
      .def("__repr__", [](const HermitianMatrix& h) {
        return "<HermitianMatrix dim=" + std::to_string(h.dim()) + ">";
      });

  // matcore
  m.def("eigh",
        [](const HermitianMatrix& h) {
          const Spectrum s = eigh(h);
          return py::make_tuple(s.eigenvalues, rows_of(s.eigenvectors));
        },
        py::arg("h"),
        "Eigenvalues (ascending) and the unitary eigenvector matrix as rows.");
  m.def("eigvalsh", &eigvalsh, py::arg("h"));
  m.def("spectral_norm", &spectral_norm, py::arg("h"));
  m.def("evolve",
        [](const HermitianMatrix& h, double t, const StateVector& psi) {
          return evolve(h, t, psi);
        },
        py::arg("h"), py::arg("t"), py::arg("psi"), "Exact exp(-iHt) psi.");
  m.def("expm_unitary",
        [](const HermitianMatrix& h, double t) { return rows_of(expm_unitary(h, t)); },
        py::arg("h"), py::arg("t"));
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("abs_entrywise", &abs_entrywise, py::arg("h"));
  m.def("basis_state", &basis_state, py::arg("n"), py::arg("j"));
  m.def("uniform_state", &uniform_state, py::arg("n"));

  // norms
  py::class_<NormProfile>(m, "NormProfile")
      .def_readonly("n", &NormProfile::n)
      .def_readonly("k", &NormProfile::k)
      .def_readonly("max_norm", &NormProfile::max_norm)
      .def_readonly("mcn", &NormProfile::mcn)
      .def_readonly("spectral", &NormProfile::spectral)
      .def_readonly("abs_spectral", &NormProfile::abs_spectral)
      .def_readonly("one_norm", &NormProfile::one_norm);
  py::class_<ChainLink>(m, "ChainLink")
      .def_readonly("name", &ChainLink::name)
      .def_readonly("lhs", &ChainLink::lhs)
      .def_readonly("rhs", &ChainLink::rhs)
      .def_readonly("slack", &ChainLink::slack)
      .def_readonly("ok", &ChainLink::ok);
  py::class_<ChainReport>(m, "ChainReport")
      .def_readonly("profile", &ChainReport::profile)
      .def_readonly("general", &ChainReport::general)
      .def_readonly("sparse", &ChainReport::sparse)
      .def_readonly("all_ok", &ChainReport::all_ok);
  py::class_<WalkCostEstimate>(m, "WalkCostEstimate")
      .def_readonly("t", &WalkCostEstimate::t)
      .def_readonly("delta", &WalkCostEstimate::delta)
      .def_readonly("steps_abs", &WalkCostEstimate::steps_abs)
      .def_readonly("steps_one", &WalkCostEstimate::steps_one);
  m.def("norm_profile", &norm_profile, py::arg("h"));
  m.def("norm_chain_report", &norm_chain_report, py::arg("h"));
  m.def("walk_cost_estimate",
        [](const HermitianMatrix& h, double t, double delta) {
          return walk_cost_estimate(h, t, delta);
        },
        py::arg("h"), py::arg("t"), py::arg("delta"));

  // instances
  m.def("line_hamiltonian", &line_hamiltonian, py::arg("n"));
  m.def("parity_hamiltonian",
        [](const StrOrInts& bits) { return parity_hamiltonian(bits_from(bits)); },
        py::arg("bits"));
  m.def("dense_parity_hamiltonian",
        [](const StrOrInts& bits, std::size_t dim_cap) {
          return dense_parity_hamiltonian(bits_from(bits), dim_cap);
        },
        py::arg("bits"), py::arg("dim_cap") = 4096);
  m.def("circulant_from_string",
        [](const StrOrInts& signs) { return circulant_from_string(signs_from(signs)); },
        py::arg("signs"));
  m.def("circulant_spectrum",
        [](const StrOrInts& signs) { return circulant_spectrum(signs_from(signs)).lambdas; },
        py::arg("signs"));
  m.def("hadamard_tensor", &hadamard_tensor, py::arg("n"));
  m.def("saturating_witness",
        [](const std::string& kind, std::size_t size) {
          if (kind == "identity") return saturating_witness(WitnessKind::identity, size);
          if (kind == "all-ones" || kind == "all_ones") {
            return saturating_witness(WitnessKind::all_ones, size);
          }
          if (kind == "hadamard") return saturating_witness(WitnessKind::hadamard, size);
          throw std::invalid_argument("unknown witness kind '" + kind + "'");
        },
        py::arg("kind"), py::arg("size"));

  // graphdecomp
  py::class_<Star>(m, "Star")
      .def_readonly("center", &Star::center)
      .def_readonly("leaves", &Star::leaves)
      .def_readonly("weights", &Star::weights);
  py::class_<StarForestDecomposition>(m, "StarForestDecomposition")
      .def_readonly("forests", &StarForestDecomposition::forests)
      .def_readonly("source_edge_count", &StarForestDecomposition::source_edge_count)
      .def_readonly("source_forest_count", &StarForestDecomposition::source_forest_count);
  py::class_<ArboricityBound>(m, "ArboricityBound")
      .def_readonly("name", &ArboricityBound::name)
      .def_readonly("lhs", &ArboricityBound::lhs)
      .def_readonly("rhs", &ArboricityBound::rhs)
      .def_readonly("ok", &ArboricityBound::ok);
  py::class_<ArboricityReport>(m, "ArboricityReport")
      .def_readonly("k_forests", &ArboricityReport::k_forests)
      .def_readonly("mcn", &ArboricityReport::mcn)
      .def_readonly("spectral", &ArboricityReport::spectral)
      .def_readonly("abs_spectral", &ArboricityReport::abs_spectral)
      .def_readonly("bounds", &ArboricityReport::bounds)
      .def_readonly("all_ok", &ArboricityReport::all_ok);
  m.def("flatten_phases",
        [](const HermitianMatrix& h) {
          const PhaseFlattening f = flatten_phases(h);
          return py::make_tuple(f.u_diag, f.roots);
        },
        py::arg("h"),
        "Diagonal unitary (and the roots used) with U H U^dag == abs(H) for forests.");
  m.def("star_decompose",
        [](const HermitianMatrix& h) { return star_decompose(h); }, py::arg("h"));
  m.def("arboricity_bound_report",
        [](const HermitianMatrix& h, const StarForestDecomposition& d) {
          return arboricity_bound_report(h, d);
        },
        py::arg("h"), py::arg("decomposition"));
  m.def("trotter_evolve",
        [](const StarForestDecomposition& d, double t, std::size_t steps,
           const StateVector& psi) { return trotter_evolve(d, t, steps, psi); },
        py::arg("decomposition"), py::arg("t"), py::arg("steps"), py::arg("psi"));

  // stochastic
  py::class_<PromiseConfig>(m, "PromiseConfig")
      .def_readonly("M", &PromiseConfig::m)
      .def_readonly("B", &PromiseConfig::b)
      .def_readonly("tau", &PromiseConfig::tau);
  py::class_<TailReport>(m, "TailReport")
      .def_readonly("M", &TailReport::m)
      .def_readonly("d", &TailReport::d)
      .def_readonly("trials", &TailReport::trials)
      .def_readonly("threshold", &TailReport::threshold)
      .def_readonly("exceed_count", &TailReport::exceed_count)
      .def_readonly("empirical_prob", &TailReport::empirical_prob)
      .def_readonly("bound_lemma", &TailReport::bound_lemma)
      .def_readonly("bound_union", &TailReport::bound_union)
      .def_readonly("std_err", &TailReport::std_err);
  py::class_<PromiseProbability>(m, "PromiseProbability")
      .def_readonly("M", &PromiseProbability::m)
      .def_readonly("B", &PromiseProbability::b)
      .def_property_readonly("numerator",
                             [](const PromiseProbability& p) {
                               return py::cast(p.numerator.to_decimal());
                             })
      .def_property_readonly("denominator",
                             [](const PromiseProbability& p) {
                               return py::cast(p.denominator.to_decimal());
                             })
      .def_readonly("exact_value", &PromiseProbability::exact_value)
      .def_readonly("asymptotic", &PromiseProbability::asymptotic);
  py::class_<AdversaryReport>(m, "AdversaryReport")
      .def_readonly("M", &AdversaryReport::m_len)
      .def_readonly("B", &AdversaryReport::b)
      .def_property_readonly(
          "m", [](const AdversaryReport& r) { return py::cast(r.m_count.to_decimal()); })
      .def_property_readonly(
          "l", [](const AdversaryReport& r) { return py::cast(r.l_count.to_decimal()); })
      .def_readonly("ratio_num", &AdversaryReport::ratio_num)
      .def_readonly("ratio_den", &AdversaryReport::ratio_den)
      .def_readonly("lower_bound", &AdversaryReport::lower_bound)
      .def_readonly("counting_queries", &AdversaryReport::counting_queries);
  py::class_<AverageCaseReport>(m, "AverageCaseReport")
      .def_readonly("M", &AverageCaseReport::m)
      .def_readonly("c", &AverageCaseReport::c)
      .def_readonly("d", &AverageCaseReport::d)
      .def_readonly("B", &AverageCaseReport::b)
      .def_readonly("tau", &AverageCaseReport::tau)
      .def_readonly("term1_pi", &AverageCaseReport::term1_pi)
      .def_readonly("term1", &AverageCaseReport::term1)
      .def_readonly("p_large", &AverageCaseReport::p_large)
      .def_readonly("term2", &AverageCaseReport::term2)
      .def_readonly("total", &AverageCaseReport::total)
      .def_readonly("lower_bound", &AverageCaseReport::lower_bound)
      .def_readonly("term1_dominates", &AverageCaseReport::term1_dominates)
      .def_readonly("exponent_condition", &AverageCaseReport::exponent_condition)
      .def_readonly("below_lower_bound", &AverageCaseReport::below_lower_bound);
  m.def("derive_promise_bound", &derive_promise_bound, py::arg("M"));
  m.def("promise_config", &promise_config, py::arg("M"), py::arg("B"));
  m.def("sample_promise_string",
        [](const PromiseConfig& cfg, std::uint64_t seed) {
          return sample_promise_string(cfg, seed).signs;
        },
        py::arg("cfg"), py::arg("seed"));
  m.def("tail_estimate", &tail_estimate, py::arg("M"), py::arg("d"), py::arg("trials"),
        py::arg("seed"));
  m.def("hoeffding_bound", &hoeffding_bound, py::arg("M"), py::arg("t"), py::arg("ranges"));
  m.def("promise_probability", &promise_probability, py::arg("M"), py::arg("B"));
  m.def("adversary_bound", &adversary_bound, py::arg("M"), py::arg("B"));
  m.def("average_case_bound", &average_case_bound, py::arg("M"), py::arg("c"), py::arg("d"));

  // experiments
  py::class_<ExperimentReport>(m, "ExperimentReport")
      .def_readonly("name", &ExperimentReport::name)
      .def_readonly("inputs", &ExperimentReport::inputs)
      .def_readonly("metrics", &ExperimentReport::metrics)
      .def_readonly("pass_", &ExperimentReport::pass)
      .def("__repr__", [](const ExperimentReport& r) {
        return "<ExperimentReport " + r.name + (r.pass ? " pass>" : " FAIL>");
      });
  py::class_<ParityResult>(m, "ParityResult")
      .def_readonly("parity", &ParityResult::parity)
      .def_readonly("fidelity", &ParityResult::fidelity)
      .def_readonly("subspace_deviation", &ParityResult::subspace_deviation)
      .def_readonly("report", &ParityResult::report);
  py::class_<SignDetectionResult>(m, "SignDetectionResult")
      .def_readonly("sign", &SignDetectionResult::sign)
      .def_readonly("phase_error", &SignDetectionResult::phase_error)
      .def_readonly("matrix_queries", &SignDetectionResult::matrix_queries)
      .def_readonly("string_queries", &SignDetectionResult::string_queries)
      .def_readonly("report", &SignDetectionResult::report);
  py::class_<FastForwardResult>(m, "FastForwardResult")
      .def_readonly("max_deviation_from_identity",
                    &FastForwardResult::max_deviation_from_identity)
      .def_readonly("spectral", &FastForwardResult::spectral)
      .def_readonly("abs_spectral", &FastForwardResult::abs_spectral)
      .def_readonly("report", &FastForwardResult::report);
  m.def("parity_experiment",
        [](const StrOrInts& bits, std::size_t dim_cap) {
          return parity_experiment(bits_from(bits), dim_cap);
        },
        py::arg("bits"), py::arg("dim_cap") = 4096);
  m.def("sign_detection_experiment",
        [](const StrOrInts& signs) {
          const SignString s = signs_from(signs);
          const int sum = sign_sum(s);
          if (sum == 0) throw std::invalid_argument("promise strings cannot sum to 0");
          const PromiseConfig cfg =
              promise_config(s.signs.size(), static_cast<std::size_t>(std::abs(sum)));
          return sign_detection_experiment(s, cfg);
        },
        py::arg("signs"));
  m.def("fastforward_witness", &fastforward_witness, py::arg("n"), py::arg("tau"));
}

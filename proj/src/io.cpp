#include "hamlim/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hamlim {

namespace {

using nlohmann::json;

json complex_pairs(const std::vector<cplx>& values) {
  json out = json::array();
  for (const cplx& v : values) out.push_back(json::array({v.real(), v.imag()}));
  return out;
}

std::vector<cplx> parse_pairs(const json& arr, std::size_t expected, const char* what) {
  if (!arr.is_array() || arr.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": wrong entry count");
  }
  std::vector<cplx> out;
  out.reserve(expected);
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument(std::string(what) + ": entries must be [re, im] pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

json links_json(const std::vector<ChainLink>& links) {
  json out = json::array();
  for (const ChainLink& link : links) {
    out.push_back({{"name", link.name},
                   {"lhs", link.lhs},
                   {"rhs", link.rhs},
                   {"slack", link.slack},
                   {"ok", link.ok}});
  }
  return out;
}

json profile_json(const NormProfile& p) {
  return {{"n", p.n},
          {"k", p.k},
          {"max_norm", p.max_norm},
          {"mcn", p.mcn},
          {"spectral", p.spectral},
          {"abs_spectral", p.abs_spectral},
          {"one_norm", p.one_norm}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string matrix_to_json(const HermitianMatrix& h) {
  json out = {{"format", "densecomplex-v1"}, {"n", h.dim()}, {"entries", complex_pairs(h.data())}};
  return out.dump();
}

HermitianMatrix matrix_from_json(const std::string& text, double zero_tol) {
  const json in = json::parse(text);
  if (in.value("format", "") != "densecomplex-v1") {
    throw std::invalid_argument("expected a densecomplex-v1 matrix file");
  }
  const std::size_t n = in.at("n").get<std::size_t>();
  std::vector<cplx> entries = parse_pairs(in.at("entries"), n * n, "densecomplex-v1");
  if (zero_tol > 0.0) {
    for (cplx& v : entries) {
      if (std::abs(v) <= zero_tol) v = 0.0;
    }
  }
  return HermitianMatrix::from_entries(n, std::move(entries));
}

std::string statevec_to_json(const StateVector& psi) {
  std::vector<cplx> values(psi.begin(), psi.end());
  json out = {{"format", "statevec-v1"}, {"n", psi.size()}, {"amplitudes", complex_pairs(values)}};
  return out.dump();
}

StateVector statevec_from_json(const std::string& text) {
  const json in = json::parse(text);
  if (in.value("format", "") != "statevec-v1") {
    throw std::invalid_argument("expected a statevec-v1 file");
  }
  const std::size_t n = in.at("n").get<std::size_t>();
  return parse_pairs(in.at("amplitudes"), n, "statevec-v1");
}

HermitianMatrix load_matrix(const std::string& path, double zero_tol) {
  return matrix_from_json(read_file(path), zero_tol);
}

StateVector load_statevec(const std::string& path) {
  return statevec_from_json(read_file(path));
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string norm_profile_json(const NormProfile& p) { return profile_json(p).dump(); }

std::string chain_report_json(const ChainReport& r) {
  json out = {{"profile", profile_json(r.profile)},
              {"general_chain", links_json(r.general)},
              {"sparse_chain", links_json(r.sparse)},
              {"mcn_abs_delta", r.mcn_abs_delta},
              {"one_norm_abs_delta", r.one_norm_abs_delta},
              {"all_ok", r.all_ok}};
  return out.dump();
}

std::string chain_report_csv(const ChainReport& r) {
  std::ostringstream out;
  out << "chain,name,lhs,rhs,slack,ok\n";
  auto rows = [&out](const char* chain, const std::vector<ChainLink>& links) {
    for (const ChainLink& link : links) {
      out << chain << ',' << link.name << ',' << json(link.lhs).dump() << ','
          << json(link.rhs).dump() << ',' << json(link.slack).dump() << ','
          << (link.ok ? "true" : "false") << '\n';
    }
  };
  rows("general", r.general);
  rows("sparse", r.sparse);
  return out.str();
}

std::string walk_cost_json(const WalkCostEstimate& e) {
  json out = {
      {"t", e.t}, {"delta", e.delta}, {"steps_abs", e.steps_abs}, {"steps_one", e.steps_one}};
  return out.dump();
}

std::string decomposition_json(const StarForestDecomposition& d) {
  json forests = json::array();
  for (const auto& forest : d.forests) {
    json stars = json::array();
    for (const Star& star : forest) {
      json weights = json::array();
      for (const cplx& w : star.weights) weights.push_back(json::array({w.real(), w.imag()}));
      stars.push_back({{"center", star.center}, {"leaves", star.leaves}, {"weights", weights}});
    }
    forests.push_back(stars);
  }
  json out = {{"forests", forests},
              {"source_edge_count", d.source_edge_count},
              {"source_forest_count", d.source_forest_count}};
  return out.dump();
}

std::string arboricity_report_json(const ArboricityReport& r) {
  json bounds = json::array();
  for (const ArboricityBound& b : r.bounds) {
    bounds.push_back(
        {{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"slack", b.slack}, {"ok", b.ok}});
  }
  json out = {{"k_forests", r.k_forests},
              {"mcn", r.mcn},
              {"spectral", r.spectral},
              {"abs_spectral", r.abs_spectral},
              {"sum_star_norms", r.sum_star_norms},
              {"bounds", bounds},
              {"all_ok", r.all_ok}};
  return out.dump();
}

std::string tail_report_json(const TailReport& r) {
  json out = {{"M", r.m},
              {"d", r.d},
              {"trials", r.trials},
              {"seed", r.seed},
              {"threshold", r.threshold},
              {"exceed_count", r.exceed_count},
              {"empirical_prob", r.empirical_prob},
              {"bound_lemma", r.bound_lemma},
              {"bound_union", r.bound_union},
              {"std_err", r.std_err}};
  return out.dump();
}

std::string tail_report_csv(const TailReport& r) {
  std::ostringstream out;
  out << "M,d,trials,seed,threshold,exceed_count,empirical_prob,bound_lemma,bound_union,std_err\n"
      << r.m << ',' << r.d << ',' << r.trials << ',' << r.seed << ','
      << nlohmann::json(r.threshold).dump() << ',' << r.exceed_count << ','
      << nlohmann::json(r.empirical_prob).dump() << ',' << nlohmann::json(r.bound_lemma).dump()
      << ',' << nlohmann::json(r.bound_union).dump() << ',' << nlohmann::json(r.std_err).dump()
      << '\n';
  return out.str();
}

std::string promise_probability_json(const PromiseProbability& p) {
  json out = {{"M", p.m},
              {"B", p.b},
              {"numerator", p.numerator.to_decimal()},
              {"denominator", p.denominator.to_decimal()},
              {"exact_value", p.exact_value},
              {"asymptotic", p.asymptotic}};
  return out.dump();
}

std::string adversary_report_json(const AdversaryReport& r) {
  json out = {{"M", r.m_len},
              {"B", r.b},
              {"m", r.m_count.to_decimal()},
              {"l", r.l_count.to_decimal()},
              {"ratio_num", r.ratio_num},
              {"ratio_den", r.ratio_den},
              {"lower_bound", r.lower_bound},
              {"counting_queries", r.counting_queries}};
  return out.dump();
}

std::string average_case_report_json(const AverageCaseReport& r) {
  json out = {{"M", r.m},
              {"c", r.c},
              {"d", r.d},
              {"B", r.b},
              {"tau", r.tau},
              {"term1_pi", r.term1_pi},
              {"term1", r.term1},
              {"p_large", r.p_large},
              {"term2", r.term2},
              {"total", r.total},
              {"lower_bound", r.lower_bound},
              {"term1_dominates", r.term1_dominates},
              {"exponent_condition", r.exponent_condition},
              {"below_lower_bound", r.below_lower_bound}};
  return out.dump();
}

std::string experiment_report_json(const ExperimentReport& r, bool with_wall_time) {
  json out = {{"name", r.name},
              {"seed", r.seed},
              {"inputs", r.inputs},
              {"metrics", r.metrics},
              {"pass", r.pass}};
  if (with_wall_time) out["wall_time_s"] = r.wall_time_seconds;
  return out.dump();
}

std::string experiment_report_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "name,key,value\n";
  for (const auto& [key, value] : r.inputs) out << r.name << ',' << key << ',' << value << '\n';
  for (const auto& [key, value] : r.metrics) {
    out << r.name << ',' << key << ',' << nlohmann::json(value).dump() << '\n';
  }
  out << r.name << ",pass," << (r.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace hamlim

#pragma once

#include <string>

#include "hamlim/experiments.hpp"
#include "hamlim/graph.hpp"
#include "hamlim/matrix.hpp"
#include "hamlim/norms.hpp"
#include "hamlim/stochastic.hpp"

namespace hamlim {

// densecomplex-v1: {"format":"densecomplex-v1","n":N,"entries":[[re,im],...]}
// with N^2 row-major pairs. Serialized floats use the shortest decimal that
// round-trips, so save/load is exact.
std::string matrix_to_json(const HermitianMatrix& h);
HermitianMatrix matrix_from_json(const std::string& text, double zero_tol = 0.0);

// statevec-v1: {"format":"statevec-v1","n":N,"amplitudes":[[re,im],...]}
std::string statevec_to_json(const StateVector& psi);
StateVector statevec_from_json(const std::string& text);

HermitianMatrix load_matrix(const std::string& path, double zero_tol = 0.0);
StateVector load_statevec(const std::string& path);
void save_text(const std::string& path, const std::string& text);

// Canonical report serializers (no timestamps; byte-stable given the same
// inputs). CSV projections are fixed-column.
std::string norm_profile_json(const NormProfile& p);
std::string chain_report_json(const ChainReport& r);
std::string chain_report_csv(const ChainReport& r);
std::string walk_cost_json(const WalkCostEstimate& e);
std::string decomposition_json(const StarForestDecomposition& d);
std::string arboricity_report_json(const ArboricityReport& r);
std::string tail_report_json(const TailReport& r);
std::string tail_report_csv(const TailReport& r);
std::string promise_probability_json(const PromiseProbability& p);
std::string adversary_report_json(const AdversaryReport& r);
std::string average_case_report_json(const AverageCaseReport& r);
std::string experiment_report_json(const ExperimentReport& r, bool with_wall_time = false);
std::string experiment_report_csv(const ExperimentReport& r);

}  // namespace hamlim

#pragma once

#include <string>

#include "hamlim/matrix.hpp"

namespace hamlim {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;  // u < v
  cplx weight;        // nonzero
};

// Graph of the nonzero off-diagonal entries of a Hermitian matrix. Nonzero
// diagonal positions are reported separately; they carry no edges.
struct WeightedGraph {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> nonzero_diagonal;
};

WeightedGraph graph_of(const HermitianMatrix& h);

// BFS forest classification with deterministic roots (smallest vertex index
// per component). When the graph has a cycle, `cycle` holds its vertices in
// order and the forest fields beyond `component` are not meaningful.
struct ForestClassification {
  bool is_forest = false;
  std::size_t component_count = 0;
  std::vector<int> component;          // size n
  std::vector<std::size_t> roots;      // one per component
  std::vector<std::ptrdiff_t> parent;  // -1 at roots
  std::vector<std::size_t> depth;
  std::vector<std::size_t> cycle;
};

ForestClassification classify_graph(const WeightedGraph& g);

// Diagonal unitary built from edge phases along root-to-vertex paths. For a
// forest-shaped H with nonnegative real diagonal, conjugating by this matrix
// gives exactly abs(H), hence ||abs(H)|| = ||H||.
struct PhaseFlattening {
  std::vector<cplx> u_diag;        // unit modulus
  std::vector<std::size_t> roots;  // chosen vertex per component
};

PhaseFlattening flatten_phases(const HermitianMatrix& h);

// U H U^dag for diagonal U (given by its diagonal).
HermitianMatrix conjugate_by_diagonal(const HermitianMatrix& h, const std::vector<cplx>& u_diag);

// A star: one center adjacent to distinct leaves, weight per leaf taken from
// the (leaf, center) matrix entry. The weight vector w determines the only
// nonzero eigenvalues, +-||w||.
struct Star {
  std::size_t center = 0;
  std::vector<std::size_t> leaves;
  std::vector<cplx> weights;
};

double star_weight_norm(const Star& star);

// Partition of edges into star forests. `forests[l]` is a vertex-disjoint
// collection of stars; every source edge appears in exactly one star.
// source_forest_count is the number of plain forests split (k'), so the
// decomposition has at most 2*k' star forests.
struct StarForestDecomposition {
  std::vector<std::vector<Star>> forests;
  std::size_t source_edge_count = 0;
  std::size_t source_forest_count = 0;
};

// Splits a forest into two star forests by the parity of the parent depth:
// edges whose parent sits at even distance from the root go first.
StarForestDecomposition star_forest_split(const WeightedGraph& g);

// Peels maximal spanning forests until no edge remains (deterministic
// (u, v) scan order). Returns k' >= arboricity(g) forests.
std::vector<WeightedGraph> greedy_forest_partition(const WeightedGraph& g);

// Zero-diagonal H == sum of star-forest Hamiltonians, one per star forest.
StarForestDecomposition star_decompose(const HermitianMatrix& h);
StarForestDecomposition star_decompose(const HermitianMatrix& h,
                                       const std::vector<WeightedGraph>& forests);

// Embeds one star forest back into an n x n Hamiltonian.
HermitianMatrix star_forest_matrix(std::size_t n, const std::vector<Star>& stars);

struct ArboricityBound {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool ok = false;
};

// Checks the decomposition-driven inequalities with k' forests:
//   ||abs(H)|| <= 2k' mcn(H),   ||abs(H)|| <= 2k' ||H||,   ||H|| <= 2k' mcn(H),
//   mcn(H) >= (1/2k') sum_l ||S_l||,   ||abs(H)|| <= sum_l ||S_l||.
struct ArboricityReport {
  std::size_t k_forests = 0;  // k'
  double mcn = 0.0;
  double spectral = 0.0;
  double abs_spectral = 0.0;
  double sum_star_norms = 0.0;
  std::vector<ArboricityBound> bounds;
  bool all_ok = false;
};

ArboricityReport arboricity_bound_report(const HermitianMatrix& h,
                                         const StarForestDecomposition& d);

// exp(-i S t) psi in time linear in the star size, using that the star
// squares to ||w||^2 times the projector onto span{e_center, w}.
StateVector star_exponential(const Star& star, double t, const StateVector& psi);

// First-order product formula: (prod_l exp(-i S_l t/steps))^steps psi, star
// forests applied in list order.
StateVector trotter_evolve(const StarForestDecomposition& d, double t, std::size_t steps,
                           const StateVector& psi);

}  // namespace hamlim

#include "hamlim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "hamlim/eigh.hpp"
#include "hamlim/norms.hpp"

namespace hamlim {

namespace {

std::vector<std::vector<std::pair<std::size_t, cplx>>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, cplx>>> adj(g.n);
  for (const WeightedEdge& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, std::conj(e.weight));
  }
  return adj;
}

// Union-find with path compression; no ranks so the scan order alone
// determines the structure.
struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

WeightedGraph graph_of(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  WeightedGraph g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u) {
    if (h(u, u) != cplx(0.0)) g.nonzero_diagonal.push_back(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (h(u, v) != cplx(0.0)) g.edges.push_back({u, v, h(u, v)});
    }
  }
  return g;
}

ForestClassification classify_graph(const WeightedGraph& g) {
  ForestClassification out;
  out.component.assign(g.n, -1);
  out.parent.assign(g.n, -1);
  out.depth.assign(g.n, 0);
  auto adj = adjacency(g);
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  for (std::size_t root = 0; root < g.n; ++root) {
    if (out.component[root] != -1) continue;
    const int comp = static_cast<int>(out.roots.size());
    out.roots.push_back(root);
    out.component[root] = comp;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (const auto& [v, w] : adj[u]) {
        (void)w;
        if (out.component[v] == -1) {
          out.component[v] = comp;
          out.parent[v] = static_cast<std::ptrdiff_t>(u);
          out.depth[v] = out.depth[u] + 1;
          frontier.push(v);
        } else if (static_cast<std::ptrdiff_t>(v) != out.parent[u]) {
          // Non-tree edge: walk both endpoints up to their BFS meeting point.
          std::vector<std::size_t> path_u{u}, path_v{v};
          std::size_t a = u, b = v;
          while (out.depth[a] > out.depth[b]) {
            a = static_cast<std::size_t>(out.parent[a]);
            path_u.push_back(a);
          }
          while (out.depth[b] > out.depth[a]) {
            b = static_cast<std::size_t>(out.parent[b]);
            path_v.push_back(b);
          }
          while (a != b) {
            a = static_cast<std::size_t>(out.parent[a]);
            b = static_cast<std::size_t>(out.parent[b]);
            path_u.push_back(a);
            path_v.push_back(b);
          }
          out.cycle = path_u;
          for (std::size_t i = path_v.size() - 1; i-- > 0;) out.cycle.push_back(path_v[i]);
          out.is_forest = false;
          out.component_count = out.roots.size();
          return out;
        }
      }
    }
  }
  out.is_forest = true;
  out.component_count = out.roots.size();
  return out;
}

PhaseFlattening flatten_phases(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (h(i, i).real() < 0.0) {
      throw std::invalid_argument(
          "flatten_phases: diagonal entries must be nonnegative (diagonal conjugation cannot "
          "change their sign)");
    }
  }
  const WeightedGraph g = graph_of(h);
  const ForestClassification cls = classify_graph(g);
  if (!cls.is_forest) throw std::invalid_argument("flatten_phases: graph is not a forest");

  PhaseFlattening out;
  out.u_diag.assign(n, cplx(1.0));
  out.roots = cls.roots;
  // BFS order by depth so parents are finished first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&cls](std::size_t a, std::size_t b) {
    return cls.depth[a] < cls.depth[b];
  });
  for (std::size_t v : order) {
    if (cls.parent[v] < 0) continue;
    const std::size_t p = static_cast<std::size_t>(cls.parent[v]);
    const cplx entry = h(p, v);
    out.u_diag[v] = out.u_diag[p] * (entry / std::abs(entry));
  }
  return out;
}

HermitianMatrix conjugate_by_diagonal(const HermitianMatrix& h, const std::vector<cplx>& u_diag) {
  const std::size_t n = h.dim();
  if (u_diag.size() != n) throw std::invalid_argument("diagonal dimension mismatch");
  std::vector<cplx> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entries[i * n + j] = u_diag[i] * h(i, j) * std::conj(u_diag[j]);
    }
  }
  return HermitianMatrix::from_entries(n, std::move(entries), 1e-9);
}

double star_weight_norm(const Star& star) {
  double sum = 0.0;
  for (const cplx& w : star.weights) sum += std::norm(w);
  return std::sqrt(sum);
}

StarForestDecomposition star_forest_split(const WeightedGraph& g) {
  const ForestClassification cls = classify_graph(g);
  if (!cls.is_forest) throw std::invalid_argument("star_forest_split: graph is not a forest");

  // Group edges by parent; the parent's depth parity selects the forest.
  std::array<std::map<std::size_t, Star>, 2> stars_by_center;
  for (const WeightedEdge& e : g.edges) {
    const bool u_is_parent = cls.parent[e.v] == static_cast<std::ptrdiff_t>(e.u);
    const std::size_t parent = u_is_parent ? e.u : e.v;
    const std::size_t child = u_is_parent ? e.v : e.u;
    // Star weights follow the (leaf, center) entries: weight = H[child][parent].
    const cplx weight = u_is_parent ? std::conj(e.weight) : e.weight;
    const std::size_t slot = cls.depth[parent] % 2;
    Star& star = stars_by_center[slot][parent];
    star.center = parent;
    star.leaves.push_back(child);
    star.weights.push_back(weight);
  }

  StarForestDecomposition out;
  out.source_edge_count = g.edges.size();
  out.source_forest_count = 1;
  for (const auto& slot : stars_by_center) {
    std::vector<Star> forest;
    forest.reserve(slot.size());
    for (const auto& [center, star] : slot) {
      (void)center;
      forest.push_back(star);
    }
    if (!forest.empty()) out.forests.push_back(std::move(forest));
  }
  return out;
}

std::vector<WeightedGraph> greedy_forest_partition(const WeightedGraph& g) {
  std::vector<WeightedEdge> remaining = g.edges;
  std::sort(remaining.begin(), remaining.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<WeightedGraph> forests;
  while (!remaining.empty()) {
    DisjointSets sets(g.n);
    WeightedGraph forest;
    forest.n = g.n;
    std::vector<WeightedEdge> rest;
    for (const WeightedEdge& e : remaining) {
      if (sets.unite(e.u, e.v)) {
        forest.edges.push_back(e);
      } else {
        rest.push_back(e);
      }
    }
    forests.push_back(std::move(forest));
    remaining = std::move(rest);
  }
  return forests;
}

StarForestDecomposition star_decompose(const HermitianMatrix& h) {
  return star_decompose(h, greedy_forest_partition(graph_of(h)));
}

StarForestDecomposition star_decompose(const HermitianMatrix& h,
                                       const std::vector<WeightedGraph>& forests) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (h(i, i) != cplx(0.0)) {
      throw std::invalid_argument("star_decompose requires a zero diagonal");
    }
  }
  StarForestDecomposition out;
  out.source_forest_count = forests.size();
  for (const WeightedGraph& forest : forests) {
    StarForestDecomposition part = star_forest_split(forest);
    out.source_edge_count += part.source_edge_count;
    for (auto& star_forest : part.forests) out.forests.push_back(std::move(star_forest));
  }
  return out;
}

HermitianMatrix star_forest_matrix(std::size_t n, const std::vector<Star>& stars) {
  HermitianMatrix h(n);
  for (const Star& star : stars) {
    for (std::size_t i = 0; i < star.leaves.size(); ++i) {
      h.set(star.leaves[i], star.center, star.weights[i]);
    }
  }
  return h;
}

ArboricityReport arboricity_bound_report(const HermitianMatrix& h,
                                         const StarForestDecomposition& d) {
  if (d.source_forest_count == 0 || d.forests.empty()) {
    throw std::invalid_argument("arboricity_bound_report needs a nonempty decomposition");
  }
  std::size_t decomposed_edges = 0;
  for (const auto& forest : d.forests) {
    for (const Star& star : forest) decomposed_edges += star.leaves.size();
  }
  if (decomposed_edges != d.source_edge_count ||
      decomposed_edges != graph_of(h).edges.size()) {
    throw std::invalid_argument("decomposition does not cover the matrix edges exactly");
  }

  ArboricityReport r;
  r.k_forests = d.source_forest_count;
  const NormProfile p = norm_profile(h);
  r.mcn = p.mcn;
  r.spectral = p.spectral;
  r.abs_spectral = p.abs_spectral;
  // A star forest is a direct sum of stars, so its norm is the largest ||w||.
  for (const auto& forest : d.forests) {
    double norm = 0.0;
    for (const Star& star : forest) norm = std::max(norm, star_weight_norm(star));
    r.sum_star_norms += norm;
  }

  const double two_k = 2.0 * static_cast<double>(r.k_forests);
  auto push = [&r](std::string name, double lhs, double rhs) {
    ArboricityBound b;
    b.name = std::move(name);
    b.lhs = lhs;
    b.rhs = rhs;
    b.slack = (rhs - lhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-12});
    b.ok = b.slack >= -1e-9;
    r.bounds.push_back(b);
  };
  push("abs_spectral<=2k*mcn", r.abs_spectral, two_k * r.mcn);
  push("abs_spectral<=2k*spectral", r.abs_spectral, two_k * r.spectral);
  push("spectral<=2k*mcn", r.spectral, two_k * r.mcn);
  push("sum_star_norms<=2k*mcn", r.sum_star_norms, two_k * r.mcn);
  push("abs_spectral<=sum_star_norms", r.abs_spectral, r.sum_star_norms);

  r.all_ok = true;
  for (const ArboricityBound& b : r.bounds) r.all_ok = r.all_ok && b.ok;
  return r;
}

StateVector star_exponential(const Star& star, double t, const StateVector& psi) {
  const double wnorm = star_weight_norm(star);
  if (wnorm == 0.0) throw std::invalid_argument("star_exponential: zero-weight star");
  StateVector out = psi;
  const std::size_t n = psi.size();
  if (star.center >= n) throw std::out_of_range("star center outside the state dimension");

  // Amplitudes along e_center and the unit weight vector.
  const cplx a = psi[star.center];
  cplx b = 0.0;
  for (std::size_t i = 0; i < star.leaves.size(); ++i) {
    b += std::conj(star.weights[i] / wnorm) * psi[star.leaves[i]];
  }
  const double theta = wnorm * t;
  const double cos_m1 = std::cos(theta) - 1.0;
  const cplx minus_i_sin = cplx(0.0, -std::sin(theta));

  out[star.center] += cos_m1 * a + minus_i_sin * b;
  for (std::size_t i = 0; i < star.leaves.size(); ++i) {
    const cplx w_hat = star.weights[i] / wnorm;
    out[star.leaves[i]] += (cos_m1 * b + minus_i_sin * a) * w_hat;
  }
  return out;
}

StateVector trotter_evolve(const StarForestDecomposition& d, double t, std::size_t steps,
                           const StateVector& psi) {
  if (steps == 0) throw std::invalid_argument("trotter_evolve needs steps >= 1");
  const double dt = t / static_cast<double>(steps);
  StateVector state = psi;
  for (std::size_t step = 0; step < steps; ++step) {
    for (const auto& forest : d.forests) {
      for (const Star& star : forest) {
        state = star_exponential(star, dt, state);
      }
    }
  }
  return state;
}

}  // namespace hamlim

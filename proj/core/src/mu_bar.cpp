#include "lnmin/mu_bar.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <queue>

#include "lnmin/errors.hpp"

namespace lnmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelaxTol = 1e-12;

struct Labels {
  std::vector<double> dist;
  std::vector<int> parent_edge;  // index into edges(), -1 at the origin
};

// Bellman-Ford over the edge list. Runs |V| - 1 rounds, then one detection
// round; any improvement left at that point can only come from a negative
// cycle, and those exist iff the underlying system is empty (query-point
// terms telescope away around a cycle, so emptiness is point-independent).
Labels label_correcting(const AuxiliaryGraph& graph) {
  const int nv = graph.num_vertices();
  Labels lab{std::vector<double>(nv, kInf), std::vector<int>(nv, -1)};
  lab.dist[graph.origin()] = 0;
  const auto& edges = graph.edges();
  for (int round = 0; round < nv - 1; ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const AuxEdge& ed = edges[e];
      if (lab.dist[ed.from] == kInf) continue;
      const double cand = lab.dist[ed.from] + ed.weight;
      if (cand < lab.dist[ed.to] - kRelaxTol) {
        lab.dist[ed.to] = cand;
        lab.parent_edge[ed.to] = static_cast<int>(e);
        changed = true;
      }
    }
    if (!changed) return lab;
  }
  for (const AuxEdge& ed : edges) {
    if (lab.dist[ed.from] == kInf) continue;
    if (lab.dist[ed.from] + ed.weight < lab.dist[ed.to] - 1e-9)
      throw InfeasibleInputError("inequality system is empty (negative cycle)");
  }
  return lab;
}

Labels dijkstra(const AuxiliaryGraph& graph, const RealVec& potential) {
  const int nv = graph.num_vertices();
  if (static_cast<int>(potential.size()) != nv)
    throw PreconditionError("shortest_path: potential has wrong length");

  const auto& edges = graph.edges();
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) adj[edges[e].from].push_back(static_cast<int>(e));

  Labels lab{std::vector<double>(nv, kInf), std::vector<int>(nv, -1)};
  lab.dist[graph.origin()] = 0;  // reweighted units during the scan

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, graph.origin()});
  std::vector<char> done(nv, 0);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int e : adj[u]) {
      const AuxEdge& ed = edges[e];
      double w = ed.weight - potential[ed.to] + potential[ed.from];
      if (w < -1e-9) throw PreconditionError("shortest_path: potential leaves a negative edge");
      if (w < 0) w = 0;
      const double cand = d + w;
      if (cand < lab.dist[ed.to]) {
        lab.dist[ed.to] = cand;
        lab.parent_edge[ed.to] = e;
        heap.push({cand, ed.to});
      }
    }
  }
  // Back to original units.
  for (int v = 0; v < nv; ++v)
    if (lab.dist[v] != kInf) lab.dist[v] += potential[v] - potential[graph.origin()];
  return lab;
}

PathWitness path_from_labels(const AuxiliaryGraph& graph, const Labels& lab) {
  const int t = graph.destination();
  if (lab.dist[t] == kInf) throw InternalError("shortest_path: destination unreachable");
  PathWitness path;
  std::vector<int> rev;
  int v = t;
  double weight = 0;
  while (v != graph.origin()) {
    rev.push_back(v);
    const int e = lab.parent_edge[v];
    if (e < 0) throw InternalError("shortest_path: broken parent chain");
    weight += graph.edges()[e].weight;
    v = graph.edges()[e].from;
  }
  rev.push_back(graph.origin());
  path.vertices.assign(rev.rbegin(), rev.rend());
  path.weight = weight;
  path.entry = path.vertices[1];
  path.exit = path.vertices[path.vertices.size() - 2];
  return path;
}

Labels all_labels(const AuxiliaryGraph& graph, const std::optional<RealVec>& potential) {
  if (potential) return dijkstra(graph, *potential);
  return label_correcting(graph);
}

std::optional<RealVec> make_potential(const InequalitySystem& system, const RealVec& point,
                                      const std::optional<RealVec>& witness) {
  if (!witness) return std::nullopt;
  return potential_from_point(system, *witness, point);
}

}  // namespace

AuxiliaryGraph::AuxiliaryGraph(const InequalitySystem& system, const RealVec& point)
    : n_(system.dim()) {
  if (static_cast<int>(point.size()) != n_)
    throw PreconditionError("AuxiliaryGraph: point has wrong dimension");
  for (double x : point)
    if (!std::isfinite(x)) throw PreconditionError("AuxiliaryGraph: non-finite point entry");

  for (const DiffBound& b : system.difference_bounds())
    edges_.push_back({b.i, b.j, static_cast<double>(b.bound) - point[b.j] + point[b.i]});
  for (int i = 0; i < n_; ++i) {
    if (system.alpha(i))
      edges_.push_back({i, anchor(), -static_cast<double>(*system.alpha(i)) + point[i]});
    if (system.beta(i))
      edges_.push_back({anchor(), i, static_cast<double>(*system.beta(i)) - point[i]});
  }
  for (int v = 0; v <= n_; ++v) {
    edges_.push_back({origin(), v, 0.0});
    edges_.push_back({v, destination(), 0.0});
  }
}

RealVec potential_from_point(const InequalitySystem& system, const RealVec& feasible,
                             const RealVec& point) {
  const int n = system.dim();
  if (static_cast<int>(feasible.size()) != n || static_cast<int>(point.size()) != n)
    throw PreconditionError("potential_from_point: dimension mismatch");
  if (!system.contains(feasible, 1e-9))
    throw PreconditionError("potential_from_point: witness does not satisfy the system");

  // q_v = feasible_v - point_v on the coordinates, 0 at the anchor (both the
  // witness and the query extend with a zero there), and the extreme label
  // values at origin and destination so their zero fans reweight cleanly.
  RealVec q(n + 3, 0.0);
  double hi = 0.0, lo = 0.0;  // anchor's difference is 0
  for (int v = 0; v < n; ++v) {
    q[v] = feasible[v] - point[v];
    hi = std::max(hi, q[v]);
    lo = std::min(lo, q[v]);
  }
  q[n + 1] = hi;  // origin
  q[n + 2] = lo;  // destination
  return q;
}

PathWitness shortest_path(const AuxiliaryGraph& graph) {
  return path_from_labels(graph, label_correcting(graph));
}

PathWitness shortest_path(const AuxiliaryGraph& graph, const RealVec& potential) {
  return path_from_labels(graph, dijkstra(graph, potential));
}

double mu_bar(const InequalitySystem& system, const RealVec& point,
              const std::optional<RealVec>& witness) {
  AuxiliaryGraph graph(system, point);
  const PathWitness path = path_from_labels(graph, all_labels(graph, make_potential(system, point, witness)));
  return -path.weight + 0.0;  // normalizes -0.0
}

RealVec subgradient_from_path(const AuxiliaryGraph& graph, const PathWitness& path) {
  RealVec z(graph.coord_count(), 0.0);
  if (path.entry == path.exit) {
    if (path.weight < -1e-9)
      std::cerr << "lnmin: degenerate two-edge shortest path with negative weight\n";
    return z;
  }
  if (path.entry < graph.coord_count()) z[path.entry] = -1.0;
  if (path.exit < graph.coord_count()) z[path.exit] = 1.0;
  return z;
}

MuBarEval mu_bar_with_subgradient(const InequalitySystem& system, const RealVec& point,
                                  const std::optional<RealVec>& witness) {
  AuxiliaryGraph graph(system, point);
  const PathWitness path = path_from_labels(graph, all_labels(graph, make_potential(system, point, witness)));
  MuBarEval eval;
  eval.value = -path.weight + 0.0;
  eval.subgradient = subgradient_from_path(graph, path);
  return eval;
}

Projection project_onto_system(const InequalitySystem& system, const RealVec& point,
                               const std::optional<RealVec>& witness) {
  AuxiliaryGraph graph(system, point);
  const Labels lab = all_labels(graph, make_potential(system, point, witness));
  if (lab.dist[graph.destination()] == kInf)
    throw InternalError("project_onto_system: destination unreachable");

  // Shift all labels so the anchor sits at zero; the shifted labels solve the
  // dual of the distance problem and point + labels is a nearest member.
  const double shift = lab.dist[graph.anchor()];
  Projection out;
  out.point.resize(system.dim());
  for (int v = 0; v < system.dim(); ++v) out.point[v] = point[v] + (lab.dist[v] - shift);
  out.distance = -lab.dist[graph.destination()] + 0.0;
  return out;
}

}  // namespace lnmin

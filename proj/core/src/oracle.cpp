#include "lnmin/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "lnmin/errors.hpp"

namespace lnmin {

BruteForceMatching brute_force_matching(const MatchingInstance& inst) {
  const int nl = inst.n_left();
  if (nl > 10) throw PreconditionError("brute_force_matching: gated to n_left <= 10");

  std::vector<std::vector<std::optional<long long>>> w(
      nl, std::vector<std::optional<long long>>(nl));
  for (const WeightedEdge& e : inst.edges()) w[e.left][e.right - nl] = e.weight;

  std::vector<int> perm(nl);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<long long> best;
  std::vector<int> best_perm;
  do {
    long long total = 0;
    bool ok = true;
    for (int l = 0; l < nl && ok; ++l) {
      if (!w[l][perm[l]])
        ok = false;
      else
        total += *w[l][perm[l]];
    }
    if (ok && (!best || total > *best)) {
      best = total;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!best) throw InfeasibleInputError("brute_force_matching: no perfect matching");

  BruteForceMatching out;
  out.weight = *best;
  for (int l = 0; l < nl; ++l) out.matching.pairs.push_back({l, nl + best_perm[l]});
  return out;
}

std::optional<long long> brute_force_mu(const InequalitySystem& system, const IntVec& point,
                                        int radius) {
  const int n = system.dim();
  if (n > 6) throw PreconditionError("brute_force_mu: gated to dimension <= 6");
  if (radius < 0 || radius > 8) throw PreconditionError("brute_force_mu: gated to radius <= 8");
  if (static_cast<int>(point.size()) != n)
    throw PreconditionError("brute_force_mu: point has wrong dimension");

  const long long side = 2LL * radius + 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= side;

  std::optional<long long> best;
  IntVec candidate(n), offset(n, -radius);
  for (long long step = 0; step < total; ++step) {
    for (int i = 0; i < n; ++i) candidate[i] = point[i] + offset[i];
    if (system.contains(candidate)) {
      long long pos = 0, neg = 0;
      for (int i = 0; i < n; ++i) {
        pos = std::max(pos, offset[i]);
        neg = std::max(neg, -offset[i]);
      }
      const long long dist = pos + neg;
      if (!best || dist < *best) best = dist;
    }
    for (int i = 0; i < n; ++i) {  // odometer
      if (++offset[i] <= radius) break;
      offset[i] = -radius;
    }
  }
  return best;
}

namespace {

void path_dfs(const AuxiliaryGraph& graph, const std::vector<std::vector<int>>& adj, int v,
              std::vector<int>& stack, std::vector<char>& visited, double weight,
              EnumeratedPaths& out) {
  if (v == graph.destination()) {
    PathWitness path;
    path.vertices = stack;
    path.weight = weight;
    path.entry = stack[1];
    path.exit = stack[stack.size() - 2];
    if (out.shortest.empty() || weight < out.min_weight - 1e-9) {
      out.min_weight = weight;
      out.shortest.clear();
      out.shortest.push_back(path);
    } else if (weight <= out.min_weight + 1e-9) {
      out.min_weight = std::min(out.min_weight, weight);
      out.shortest.push_back(path);
    }
    return;
  }
  for (int e : adj[v]) {
    const AuxEdge& ed = graph.edges()[e];
    if (visited[ed.to]) continue;
    visited[ed.to] = 1;
    stack.push_back(ed.to);
    path_dfs(graph, adj, ed.to, stack, visited, weight + ed.weight, out);
    stack.pop_back();
    visited[ed.to] = 0;
  }
}

}  // namespace

EnumeratedPaths brute_force_paths(const AuxiliaryGraph& graph) {
  if (graph.num_vertices() > 8)
    throw PreconditionError("brute_force_paths: gated to 8 vertices");
  std::vector<std::vector<int>> adj(graph.num_vertices());
  for (std::size_t e = 0; e < graph.edges().size(); ++e)
    adj[graph.edges()[e].from].push_back(static_cast<int>(e));

  EnumeratedPaths out;
  std::vector<int> stack{graph.origin()};
  std::vector<char> visited(graph.num_vertices(), 0);
  visited[graph.origin()] = 1;
  path_dfs(graph, adj, graph.origin(), stack, visited, 0.0, out);
  if (out.shortest.empty()) throw InternalError("brute_force_paths: no path found");

  // A strictly better path may have arrived after near-ties were kept.
  std::vector<PathWitness> kept;
  for (PathWitness& p : out.shortest)
    if (p.weight <= out.min_weight + 1e-9) kept.push_back(std::move(p));
  out.shortest = std::move(kept);
  return out;
}

LocalDirection brute_force_local_direction(const LnConvexOracle& g, const IntVec& p) {
  if (g.dimension > 12)
    throw PreconditionError("brute_force_local_direction: gated to dimension <= 12");
  return exhaustive_local_direction(g, p);
}

}  // namespace lnmin

#include "lnmin/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include "lnmin/errors.hpp"

namespace lnmin {

namespace {

// Adjacency in local right indices, built from the tight edges at p.
std::vector<std::vector<int>> tight_adjacency(const MatchingInstance& inst, const IntVec& p) {
  std::vector<std::vector<int>> adj(inst.n_left());
  for (const WeightedEdge& e : inst.edges())
    if (p[e.left] - p[e.right] == e.weight) adj[e.left].push_back(e.right - inst.n_left());
  return adj;
}

std::string vertex_list(const std::vector<int>& ids, int offset) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(ids[k] + offset + 1);
  }
  return out;
}

}  // namespace

MatchingInstance::MatchingInstance(int n_left, int n_right, std::vector<WeightedEdge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
  if (n_left_ < 1 || n_right_ < 1)
    throw InfeasibleInputError("instance: both sides need at least one vertex");
  if (n_left_ != n_right_)
    throw InfeasibleInputError("instance: sides must have equal size");
  for (const WeightedEdge& e : edges_) {
    if (e.left < 0 || e.left >= n_left_)
      throw InfeasibleInputError("instance: left endpoint out of range");
    if (e.right < n_left_ || e.right >= n())
      throw InfeasibleInputError("instance: right endpoint out of range");
    max_abs_weight_ = std::max(max_abs_weight_, std::abs(e.weight));
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair{a.left, a.right} < std::pair{b.left, b.right};
  });
  for (std::size_t k = 1; k < edges_.size(); ++k)
    if (edges_[k].left == edges_[k - 1].left && edges_[k].right == edges_[k - 1].right)
      throw InfeasibleInputError("instance: parallel edges are not allowed");

  std::vector<std::vector<int>> adj(n_left_);
  for (const WeightedEdge& e : edges_) adj[e.left].push_back(e.right - n_left_);
  const HopcroftKarpResult hk = hopcroft_karp(n_left_, n_right_, adj);
  if (hk.size == n_left_) return;

  // Hall diagnostic: lefts reachable from the unmatched lefts by alternating
  // paths form a deficient set together with their joint neighborhood.
  std::vector<char> vis_l(n_left_, 0), vis_r(n_right_, 0);
  std::queue<int> bfs;
  for (int l = 0; l < n_left_; ++l)
    if (hk.match_left[l] < 0) {
      vis_l[l] = 1;
      bfs.push(l);
    }
  while (!bfs.empty()) {
    const int l = bfs.front();
    bfs.pop();
    for (int r : adj[l]) {
      if (vis_r[r]) continue;
      vis_r[r] = 1;
      const int l2 = hk.match_right[r];
      if (l2 >= 0 && !vis_l[l2]) {
        vis_l[l2] = 1;
        bfs.push(l2);
      }
    }
  }
  std::vector<int> bad_l, bad_r;
  for (int l = 0; l < n_left_; ++l)
    if (vis_l[l]) bad_l.push_back(l);
  for (int r = 0; r < n_right_; ++r)
    if (vis_r[r]) bad_r.push_back(r);
  throw InfeasibleInputError("instance has no perfect matching: left set {" +
                             vertex_list(bad_l, 0) + "} has joint neighborhood {" +
                             vertex_list(bad_r, n_left_) + "}");
}

MatchingInstance MatchingInstance::read(std::istream& in) {
  int n_left = -1, n_right = -1;
  std::vector<WeightedEdge> edges;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InfeasibleInputError("instance file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tok(line);
    std::string key;
    if (!(tok >> key)) continue;
    if (key == "n_left") {
      if (!(tok >> n_left) || n_left < 1) fail("bad n_left");
    } else if (key == "n_right") {
      if (!(tok >> n_right) || n_right < 1) fail("bad n_right");
    } else if (key == "edge") {
      if (n_left < 0 || n_right < 0) fail("edge before sizes");
      int i = 0, j = 0;
      long long w = 0;
      if (!(tok >> i >> j >> w)) fail("bad edge line");
      if (i < 1 || i > n_left) fail("edge left endpoint out of range");
      if (j <= n_left || j > n_left + n_right) fail("edge right endpoint out of range");
      edges.push_back({i - 1, j - 1, w});
    } else {
      fail("unknown directive '" + key + "'");
    }
    std::string extra;
    if (tok >> extra) fail("trailing tokens");
  }
  if (n_left < 0 || n_right < 0) throw InfeasibleInputError("instance file: missing sizes");
  return MatchingInstance(n_left, n_right, std::move(edges));
}

void MatchingInstance::write(std::ostream& out) const {
  out << "n_left " << n_left_ << "\n";
  out << "n_right " << n_right_ << "\n";
  for (const WeightedEdge& e : edges_)
    out << "edge " << (e.left + 1) << " " << (e.right + 1) << " " << e.weight << "\n";
}

MatchingInstance MatchingInstance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InfeasibleInputError("cannot open instance file: " + path);
  return read(in);
}

void MatchingInstance::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write instance file: " + path);
  write(out);
}

long long matching_weight(const MatchingInstance& inst, const Matching& m) {
  long long total = 0;
  for (const auto& [l, r] : m.pairs) {
    bool found = false;
    for (const WeightedEdge& e : inst.edges())
      if (e.left == l && e.right == r) {
        total += e.weight;
        found = true;
        break;
      }
    if (!found) throw PreconditionError("matching_weight: pair is not an instance edge");
  }
  return total;
}

std::optional<long long> dual_value(const MatchingInstance& inst, const IntVec& p) {
  if (static_cast<int>(p.size()) != inst.n())
    throw PreconditionError("dual_value: point has wrong dimension");
  if (!dual_feasible(inst, p)) return std::nullopt;
  long long total = 0;
  for (int i = 0; i < inst.n_left(); ++i) total += p[i];
  for (int j = inst.n_left(); j < inst.n(); ++j) total -= p[j];
  return total;
}

bool dual_feasible(const MatchingInstance& inst, const IntVec& p) {
  if (static_cast<int>(p.size()) != inst.n())
    throw PreconditionError("dual_feasible: point has wrong dimension");
  for (const WeightedEdge& e : inst.edges())
    if (p[e.left] - p[e.right] < e.weight) return false;
  return true;
}

bool dual_feasible(const MatchingInstance& inst, const RealVec& p, double tol) {
  if (static_cast<int>(p.size()) != inst.n())
    throw PreconditionError("dual_feasible: point has wrong dimension");
  for (const WeightedEdge& e : inst.edges())
    if (p[e.left] - p[e.right] < static_cast<double>(e.weight) - tol) return false;
  return true;
}

HopcroftKarpResult hopcroft_karp(int n_left, int n_right,
                                 const std::vector<std::vector<int>>& adjacency) {
  if (static_cast<int>(adjacency.size()) != n_left)
    throw PreconditionError("hopcroft_karp: adjacency size mismatch");
  constexpr int kInf = std::numeric_limits<int>::max();

  HopcroftKarpResult res;
  res.match_left.assign(n_left, -1);
  res.match_right.assign(n_right, -1);

  std::vector<int> dist(n_left);
  auto bfs = [&]() {
    std::queue<int> q;
    for (int l = 0; l < n_left; ++l) {
      if (res.match_left[l] < 0) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool reachable_free_right = false;
    while (!q.empty()) {
      const int l = q.front();
      q.pop();
      for (int r : adjacency[l]) {
        const int l2 = res.match_right[r];
        if (l2 < 0) {
          reachable_free_right = true;
        } else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return reachable_free_right;
  };
  std::function<bool(int)> dfs = [&](int l) {
    for (int r : adjacency[l]) {
      const int l2 = res.match_right[r];
      if (l2 < 0 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        res.match_left[l] = r;
        res.match_right[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };
  while (bfs()) {
    for (int l = 0; l < n_left; ++l)
      if (res.match_left[l] < 0 && dfs(l)) ++res.size;
  }

  // Alternating reachability from the unmatched rights: right-to-left over
  // any edge, left-to-right only over the matching edge.
  res.reachable_left.assign(n_left, 0);
  res.reachable_right.assign(n_right, 0);
  std::vector<std::vector<int>> radj(n_right);
  for (int l = 0; l < n_left; ++l)
    for (int r : adjacency[l]) radj[r].push_back(l);
  std::queue<int> q;
  for (int r = 0; r < n_right; ++r)
    if (res.match_right[r] < 0) {
      res.reachable_right[r] = 1;
      q.push(r);
    }
  while (!q.empty()) {
    const int r = q.front();
    q.pop();
    for (int l : radj[r]) {
      if (res.reachable_left[l]) continue;
      res.reachable_left[l] = 1;
      const int r2 = res.match_left[l];
      if (r2 >= 0 && !res.reachable_right[r2]) {
        res.reachable_right[r2] = 1;
        q.push(r2);
      }
    }
  }
  return res;
}

LocalDirection local_opt_matching(const MatchingInstance& inst, const IntVec& p) {
  if (!dual_feasible(inst, p)) throw PreconditionError("local_opt_matching: infeasible dual");
  const HopcroftKarpResult hk = hopcroft_karp(inst.n_left(), inst.n_right(), tight_adjacency(inst, p));
  LocalDirection out;
  out.direction.assign(inst.n(), 0);
  long long lefts = 0, rights = 0;
  for (int l = 0; l < inst.n_left(); ++l)
    if (hk.reachable_left[l]) {
      out.direction[l] = 1;
      ++lefts;
    }
  for (int r = 0; r < inst.n_right(); ++r)
    if (hk.reachable_right[r]) {
      out.direction[inst.n_left() + r] = 1;
      ++rights;
    }
  out.slope = lefts - rights;
  return out;
}

long long matching_long_step(const MatchingInstance& inst, const IntVec& p, const IntVec& d) {
  if (static_cast<int>(d.size()) != inst.n())
    throw PreconditionError("matching_long_step: direction has wrong dimension");
  long long best = std::numeric_limits<long long>::max();
  for (const WeightedEdge& e : inst.edges())
    if (d[e.left] == 0 && d[e.right] == 1)
      best = std::min(best, p[e.left] - p[e.right] - e.weight);
  if (best == std::numeric_limits<long long>::max())
    throw InfeasibleInputError("matching_long_step: unbounded descent ray");
  if (best < 1) throw PreconditionError("matching_long_step: direction is not a feasible descent");
  return best;
}

LnConvexOracle matching_dual_oracle(const MatchingInstance& inst) {
  LnConvexOracle oracle;
  oracle.dimension = inst.n();
  oracle.flavor = ConvexFlavor::kL;
  oracle.value = [&inst](const IntVec& p) { return dual_value(inst, p); };
  oracle.local_direction = [&inst](const IntVec& p) { return local_opt_matching(inst, p); };
  oracle.long_step = [&inst](const IntVec& p, const IntVec& d, long long) {
    return matching_long_step(inst, p, d);
  };
  oracle.box_radius = static_cast<long long>(inst.n()) * std::max<long long>(1, inst.max_abs_weight());
  return oracle;
}

IntVec trivially_feasible_dual(const MatchingInstance& inst) {
  IntVec p(inst.n(), 0);
  std::vector<char> seen(inst.n_left(), 0);
  for (const WeightedEdge& e : inst.edges()) {
    if (!seen[e.left] || p[e.left] < e.weight) p[e.left] = e.weight;
    seen[e.left] = 1;
  }
  return p;
}

InequalitySystem dom_system(const MatchingInstance& inst) {
  InequalitySystem sys(inst.n());
  for (const WeightedEdge& e : inst.edges()) sys.add_gamma(e.left, e.right, -e.weight);
  return sys;
}

Projection feasibility_projection(const MatchingInstance& inst, const RealVec& prediction) {
  return project_onto_system(dom_system(inst), prediction,
                             to_real(trivially_feasible_dual(inst)));
}

Matching extract_primal(const MatchingInstance& inst, const IntVec& dual_opt) {
  if (!dual_feasible(inst, dual_opt)) throw PreconditionError("extract_primal: infeasible dual");
  const HopcroftKarpResult hk =
      hopcroft_karp(inst.n_left(), inst.n_right(), tight_adjacency(inst, dual_opt));
  if (hk.size < inst.n_left())
    throw PreconditionError("extract_primal: tight subgraph has no perfect matching; dual is not optimal");
  Matching m;
  for (int l = 0; l < inst.n_left(); ++l) m.pairs.push_back({l, inst.n_left() + hk.match_left[l]});
  if (matching_weight(inst, m) != *dual_value(inst, dual_opt))
    throw InternalError("extract_primal: matching weight does not meet the dual value");
  return m;
}

InequalitySystem argmin_system_matching(const MatchingInstance& inst, const Matching& m_star) {
  if (static_cast<int>(m_star.pairs.size()) != inst.n_left())
    throw PreconditionError("argmin_system_matching: matching is not perfect");
  std::vector<char> left_seen(static_cast<size_t>(inst.n_left()), 0);
  std::vector<char> right_seen(static_cast<size_t>(inst.n_right()), 0);
  for (const auto& [l, r] : m_star.pairs) {
    if (l < 0 || l >= inst.n_left() || r < inst.n_left() || r >= inst.n())
      throw PreconditionError("argmin_system_matching: matching pair is out of range");
    if (left_seen[static_cast<size_t>(l)] || right_seen[static_cast<size_t>(r - inst.n_left())])
      throw PreconditionError("argmin_system_matching: matching repeats a vertex");
    left_seen[static_cast<size_t>(l)] = 1;
    right_seen[static_cast<size_t>(r - inst.n_left())] = 1;
  }
  InequalitySystem sys = dom_system(inst);
  for (const auto& [l, r] : m_star.pairs) {
    const auto edge_bound = sys.gamma(l, r);
    if (!edge_bound) throw PreconditionError("argmin_system_matching: matching pair is not an edge");
    // Equality on matched edges: s_l - t_r <= w is the reverse difference.
    sys.add_gamma(r, l, -*edge_bound);
  }
  return sys;
}

}  // namespace lnmin

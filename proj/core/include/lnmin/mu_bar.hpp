#pragma once

#include <optional>
#include <vector>

#include "lnmin/inequality_system.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

struct AuxEdge {
  int from = 0;
  int to = 0;
  double weight = 0;
};

// Directed graph whose shortest origin-to-destination path measures how far
// a point sits outside an inequality system, under the asymmetric max-norm
// of vectors.hpp. Vertices 0..n-1 mirror the coordinates; then come the
// anchor (a zero-pinned helper coordinate carrying the box bounds), the
// origin, and the destination. Edge weights, for query point y:
//   i -> j : gamma_ij - y_j + y_i     (one per finite difference bound)
//   i -> anchor : -alpha_i + y_i      (finite lower bounds)
//   anchor -> j : beta_j - y_j        (finite upper bounds)
//   origin -> v and v -> destination : 0 for every v in {coords, anchor}
// Every origin-destination path then has weight >= -(distance of y from the
// system), with equality on shortest paths, and the zero fan guarantees the
// optimum is never positive. Infinite bounds contribute no edge.
class AuxiliaryGraph {
 public:
  AuxiliaryGraph(const InequalitySystem& system, const RealVec& point);

  int num_vertices() const { return n_ + 3; }
  int coord_count() const { return n_; }
  int anchor() const { return n_; }
  int origin() const { return n_ + 1; }
  int destination() const { return n_ + 2; }
  const std::vector<AuxEdge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<AuxEdge> edges_;
};

struct PathWitness {
  std::vector<int> vertices;  // origin first, destination last
  double weight = 0;          // sum of original edge weights along the path
  int entry = -1;             // vertex right after the origin
  int exit = -1;              // vertex right before the destination
};

// Labels q over all graph vertices making every reweighted edge weight
// w - q_to + q_from non-negative, built from any point satisfying the
// system. Throws PreconditionError when `feasible` is not actually feasible.
RealVec potential_from_point(const InequalitySystem& system, const RealVec& feasible,
                             const RealVec& point);

// Label-correcting search from the origin. Detects negative cycles, which
// happen exactly when the system is empty, and reports them as
// InfeasibleInputError.
PathWitness shortest_path(const AuxiliaryGraph& graph);

// Dijkstra on potential-reweighted weights. Path weights are reported in
// original units; the reweighting shifts every origin-destination path by
// the same constant, so the set of shortest paths is unchanged.
PathWitness shortest_path(const AuxiliaryGraph& graph, const RealVec& potential);

// Distance from `point` to the solution set of `system` (0 iff the point is
// a member). Passing a known member as `witness` routes the query through
// Dijkstra; otherwise a label-correcting pass runs and empty systems throw.
double mu_bar(const InequalitySystem& system, const RealVec& point,
              const std::optional<RealVec>& witness = std::nullopt);

// Subgradient of the distance read off a shortest path: -1 at the entry
// coordinate, +1 at the exit coordinate, anchor contributing nothing.
RealVec subgradient_from_path(const AuxiliaryGraph& graph, const PathWitness& path);

struct MuBarEval {
  double value = 0;
  RealVec subgradient;
};

MuBarEval mu_bar_with_subgradient(const InequalitySystem& system, const RealVec& point,
                                  const std::optional<RealVec>& witness = std::nullopt);

struct Projection {
  RealVec point;
  double distance = 0;
};

// Nearest member of the system under the asymmetric max-norm, from
// single-source shortest-path labels anchored so the helper coordinate gets
// label zero. Integer inputs yield an integer-valued projection.
Projection project_onto_system(const InequalitySystem& system, const RealVec& point,
                               const std::optional<RealVec>& witness = std::nullopt);

}  // namespace lnmin

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnmin/vectors.hpp"

namespace lnmin {

struct DiffBound {
  int i = 0;
  int j = 0;           // constraint p[j] - p[i] <= bound
  long long bound = 0;
};

// A conjunction of box bounds alpha_i <= p_i <= beta_i and difference bounds
// p_j - p_i <= gamma_ij over integer vectors. Absent entries mean the bound
// is infinite; there are no sentinel values. Such systems describe exactly
// the lattice-convex feasible sets this library works with, and emptiness
// surfaces as a negative cycle the first time a distance query runs.
class InequalitySystem {
 public:
  explicit InequalitySystem(int n);

  int dim() const { return n_; }

  // Setters keep the tightest bound seen for each slot.
  void set_alpha(int i, long long value);
  void set_beta(int i, long long value);
  void add_gamma(int i, int j, long long value);

  const std::optional<long long>& alpha(int i) const;
  const std::optional<long long>& beta(int i) const;
  std::optional<long long> gamma(int i, int j) const;

  // All finite difference bounds, ordered by (i, j).
  std::vector<DiffBound> difference_bounds() const;
  int finite_bound_count() const;

  bool contains(const IntVec& p) const;
  bool contains(const RealVec& p, double tol = 1e-9) const;

  // The system whose only member is `point`.
  static InequalitySystem singleton(const IntVec& point);

  // Text round trip. The format is line-oriented:
  //   n <dim>
  //   alpha <i> <value>      (1-based, at most once per i; absent = -infinity)
  //   beta <i> <value>       (absent = +infinity)
  //   gamma <i> <j> <value>  (p_j - p_i <= value)
  // with '#' starting a comment.
  static InequalitySystem read(std::istream& in);
  void write(std::ostream& out) const;
  static InequalitySystem load(const std::string& path);
  void save(const std::string& path) const;

 private:
  void check_index(int i) const;

  int n_;
  std::vector<std::optional<long long>> alpha_;
  std::vector<std::optional<long long>> beta_;
  std::map<std::pair<int, int>, long long> gamma_;
};

}  // namespace lnmin

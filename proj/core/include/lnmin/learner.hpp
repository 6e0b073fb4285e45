#pragma once

#include <functional>
#include <vector>

#include "lnmin/inequality_system.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

enum class RateMode { kFixed, kAdaptive };

// Projected online gradient descent over the box [-C, +C]^V, with a running
// average of played iterates for anytime predictions. Round t proceeds as:
// read anytime_prediction() (the average including the current iterate),
// evaluate a loss there, then ogd_step(z), which counts the round, folds the
// iterate into the average, adds |z|^2 to the rate accumulator, and moves.
// Plain non-averaged use reads iterate() instead of the prediction.
class LearnerState {
 public:
  static LearnerState fixed_rate(int n, double box_radius, double eta);
  static LearnerState adaptive(int n, double box_radius, double rho);

  int dimension() const { return static_cast<int>(iterate_.size()); }
  int completed_rounds() const { return round_; }
  double box_radius() const { return box_radius_; }
  double grad_sq_sum() const { return grad_sq_sum_; }
  const RealVec& iterate() const { return iterate_; }

  // Mean of the iterates of rounds 1..t where t is the round in progress,
  // i.e. (sum of completed-round iterates + current iterate) / t.
  RealVec anytime_prediction() const;

  // rho * C * sqrt(2n) / sqrt(accumulated squared gradient norms), the
  // accumulator already including the in-flight round's gradient. Requires a
  // non-zero accumulator; ogd_step handles the all-zeros case by standing
  // still.
  double adaptive_rate() const;

  void ogd_step(const RealVec& subgradient);

 private:
  LearnerState(int n, double box_radius, RateMode mode, double parameter);

  RealVec iterate_;
  RealVec iterate_sum_;  // over completed rounds only
  int round_ = 0;        // completed rounds
  double grad_sq_sum_ = 0;
  double box_radius_;
  RateMode mode_;
  double parameter_;  // eta for kFixed, rho for kAdaptive
};

struct LossEval {
  double value = 0;
  RealVec subgradient;
};

// 1-norm distance to a target point; subgradient is the sign vector.
LossEval l1_loss(const RealVec& target, const RealVec& point);

// max-norm distance to a target point; subgradient is a single signed unit
// at the lowest index attaining the maximum (zero when the points agree).
LossEval linf_loss(const RealVec& target, const RealVec& point);

// Distance from `point` to the system's solution set with its shortest-path
// subgradient; `witness` must satisfy the system.
LossEval mu_bar_loss(const InequalitySystem& system, const RealVec& witness,
                     const RealVec& point);

double regret(const std::vector<double>& played, const std::vector<double>& comparator);

// Cyclic coordinate descent for an approximate minimizer of a convex total
// loss over [-C, +C]^V. The returned point upper-bounds the best fixed
// comparator's loss, so regret measured against it lower-bounds true regret.
RealVec approx_box_minimizer(const std::function<double(const RealVec&)>& total_loss,
                             RealVec start, double box_radius, int sweeps = 4);

}  // namespace lnmin

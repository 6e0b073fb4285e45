#include "lnmin/learner.hpp"

#include <algorithm>
#include <cmath>

#include "lnmin/errors.hpp"
#include "lnmin/mu_bar.hpp"

namespace lnmin {

LearnerState::LearnerState(int n, double box_radius, RateMode mode, double parameter)
    : iterate_(static_cast<size_t>(n), 0.0),
      iterate_sum_(static_cast<size_t>(n), 0.0),
      box_radius_(box_radius),
      mode_(mode),
      parameter_(parameter) {
  if (n < 1) throw PreconditionError("learner dimension must be positive");
  if (!(box_radius > 0) || !std::isfinite(box_radius)) {
    throw PreconditionError("learner box radius must be positive and finite");
  }
  if (!(parameter > 0) || !std::isfinite(parameter)) {
    throw PreconditionError("learner rate parameter must be positive and finite");
  }
}

LearnerState LearnerState::fixed_rate(int n, double box_radius, double eta) {
  return LearnerState(n, box_radius, RateMode::kFixed, eta);
}

LearnerState LearnerState::adaptive(int n, double box_radius, double rho) {
  return LearnerState(n, box_radius, RateMode::kAdaptive, rho);
}

RealVec LearnerState::anytime_prediction() const {
  RealVec avg(iterate_.size());
  const double t = round_ + 1;
  for (size_t v = 0; v < avg.size(); ++v) avg[v] = (iterate_sum_[v] + iterate_[v]) / t;
  return avg;
}

double LearnerState::adaptive_rate() const {
  if (mode_ != RateMode::kAdaptive) {
    throw PreconditionError("adaptive rate requested from a fixed-rate learner");
  }
  if (!(grad_sq_sum_ > 0)) {
    throw PreconditionError("adaptive rate undefined with zero gradient history");
  }
  const double n = static_cast<double>(dimension());
  return parameter_ * box_radius_ * std::sqrt(2.0 * n) / std::sqrt(grad_sq_sum_);
}

void LearnerState::ogd_step(const RealVec& subgradient) {
  if (subgradient.size() != iterate_.size()) {
    throw PreconditionError("subgradient dimension mismatch in ogd_step");
  }
  double sq = 0;
  for (double z : subgradient) {
    if (!std::isfinite(z)) throw PreconditionError("non-finite subgradient in ogd_step");
    sq += z * z;
  }
  round_ += 1;
  for (size_t v = 0; v < iterate_.size(); ++v) iterate_sum_[v] += iterate_[v];
  grad_sq_sum_ += sq;

  double eta;
  if (mode_ == RateMode::kFixed) {
    eta = parameter_;
  } else {
    if (!(grad_sq_sum_ > 0)) return;  // nothing observed yet, stand still
    eta = adaptive_rate();
  }
  for (size_t v = 0; v < iterate_.size(); ++v) {
    const double moved = iterate_[v] - eta * subgradient[v];
    iterate_[v] = std::clamp(moved, -box_radius_, box_radius_);
  }
}

LossEval l1_loss(const RealVec& target, const RealVec& point) {
  if (target.size() != point.size()) throw PreconditionError("l1_loss dimension mismatch");
  LossEval out;
  out.subgradient.assign(point.size(), 0.0);
  for (size_t v = 0; v < point.size(); ++v) {
    const double diff = point[v] - target[v];
    out.value += std::abs(diff);
    if (diff > 0) {
      out.subgradient[v] = 1.0;
    } else if (diff < 0) {
      out.subgradient[v] = -1.0;
    }
  }
  return out;
}

LossEval linf_loss(const RealVec& target, const RealVec& point) {
  if (target.size() != point.size()) throw PreconditionError("linf_loss dimension mismatch");
  LossEval out;
  out.subgradient.assign(point.size(), 0.0);
  size_t arg = 0;
  for (size_t v = 0; v < point.size(); ++v) {
    const double gap = std::abs(point[v] - target[v]);
    if (gap > out.value) {
      out.value = gap;
      arg = v;
    }
  }
  if (out.value > 0) {
    out.subgradient[arg] = (point[arg] > target[arg]) ? 1.0 : -1.0;
  }
  return out;
}

LossEval mu_bar_loss(const InequalitySystem& system, const RealVec& witness,
                     const RealVec& point) {
  const MuBarEval res = mu_bar_with_subgradient(system, point, witness);
  LossEval out;
  out.value = res.value;
  out.subgradient = res.subgradient;
  return out;
}

double regret(const std::vector<double>& played, const std::vector<double>& comparator) {
  if (played.size() != comparator.size()) {
    throw PreconditionError("regret needs matching loss sequences");
  }
  double total = 0;
  for (size_t t = 0; t < played.size(); ++t) total += played[t] - comparator[t];
  return total;
}

RealVec approx_box_minimizer(const std::function<double(const RealVec&)>& total_loss,
                             RealVec start, double box_radius, int sweeps) {
  if (start.empty()) throw PreconditionError("approx_box_minimizer needs a nonempty start");
  if (!(box_radius > 0)) throw PreconditionError("approx_box_minimizer needs a positive box");
  for (double& x : start) x = std::clamp(x, -box_radius, box_radius);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (size_t v = 0; v < start.size(); ++v) {
      double lo = -box_radius;
      double hi = box_radius;
      // Golden-section search on the convex coordinate slice.
      const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
      double a = hi - phi * (hi - lo);
      double b = lo + phi * (hi - lo);
      start[v] = a;
      double fa = total_loss(start);
      start[v] = b;
      double fb = total_loss(start);
      for (int it = 0; it < 60 && hi - lo > 1e-9 * (1 + box_radius); ++it) {
        if (fa <= fb) {
          hi = b;
          b = a;
          fb = fa;
          a = hi - phi * (hi - lo);
          start[v] = a;
          fa = total_loss(start);
        } else {
          lo = a;
          a = b;
          fa = fb;
          b = lo + phi * (hi - lo);
          start[v] = b;
          fb = total_loss(start);
        }
      }
      start[v] = 0.5 * (lo + hi);
    }
  }
  return start;
}

}  // namespace lnmin

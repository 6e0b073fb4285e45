#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lnmin/learner.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/rng.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

// One synthetic assignment instance: a unit-weight backbone pairing left
// vertex i with right vertex i + n/2 (so a perfect matching always exists),
// plus every off-backbone pair (i, j) whose noisy weight
// (i+1) * (j - n/2 + 1 in right-local 1-based labels) + u, u uniform on
// [-sigma, +sigma], comes out positive. Draw order: left-major, then right,
// one u per off-backbone pair, so a fixed rng stream fixes the instance.
MatchingInstance generate_instance(int n, long long sigma, Rng& rng);

// `count` instances drawn sequentially from one seeded stream.
std::vector<MatchingInstance> generate_stream(int n, long long sigma, int count,
                                              unsigned long long seed);

enum class Method { kMuBar, kL1, kLinf, kCold };

Method parse_method(const std::string& name);  // mu | l1 | linf | cold
std::string method_name(Method m);

struct CellConfig {
  Method method = Method::kMuBar;
  double rho = 0.1;                       // adaptive rate scale (unused by kCold)
  std::optional<double> box_radius;       // override; default n * max(1, W)
  // Unit steps by default so recorded iteration counts track the start's
  // distance to the optimal set one-for-one; long steps compress that signal.
  bool long_step = false;
};

struct StreamMeta {
  long long sigma = 0;
  unsigned long long seed = 0;
};

struct RoundRecord {
  int t = 0;
  std::string method;
  double rho = 0;
  long long sigma = 0;
  unsigned long long seed = 0;
  double loss = 0;
  long long iterations = 0;
  double mu_bar = 0;
  double cum_avg_iterations = 0;
  long long wall_us = 0;
};

// The online loop on a fixed instance stream: predict (anytime average, or
// zero under kCold), restore feasibility (greedy raise for kL1, projection
// and half-down rounding otherwise), run warm-started steepest descent,
// extract the optimal matching and its dual description, evaluate the
// method's loss at the prediction, and feed its subgradient back. Every
// record carries the prediction's distance to the optimal-dual set alongside
// the method's own loss. A round that throws is reported on stderr and
// skipped.
std::vector<RoundRecord> run_online_rounds(const std::vector<MatchingInstance>& stream,
                                           const CellConfig& cell, const StreamMeta& meta);

struct ExperimentConfig {
  int n = 10;
  long long sigma = 5;
  int rounds = 300;
  std::vector<unsigned long long> seeds = {1, 2, 3};
  CellConfig cell;
};

// generate_stream + run_online_rounds per seed, concatenated.
std::vector<RoundRecord> run_online_experiment(const ExperimentConfig& cfg);

// Header: t,method,rho,sigma,seed,loss,iterations,mu_bar,cum_avg_iterations,wall_us
void write_csv(std::ostream& out, const std::vector<RoundRecord>& records);
void write_csv_file(const std::string& path, const std::vector<RoundRecord>& records);

// Feasibility restoration used by the kL1 baseline: scan edges in stored
// order, raise s by each violation, repeat to a fixpoint.
IntVec greedy_restore_dual(const MatchingInstance& inst, IntVec point);

// Hard rotation of two-spike targets: round t plants +3*sign*C at coordinate
// i(t) = ((t-1) mod n/2) in 0-based terms and -3*sign*C at i(t) + n/2, with
// a fair random sign per round. Any boxed point's distance to the singleton
// {target} is 6C + sign * (p_{i+n/2} - p_i), linear in p.
struct AdversarialRound {
  int coord = 0;  // 0-based left coordinate of the spike pair
  int sign = 1;   // +1 or -1
  IntVec target;
};

std::vector<AdversarialRound> adversarial_sequence(int n, long long box_radius, int rounds,
                                                   unsigned long long seed);

struct AdversarialResult {
  std::vector<AdversarialRound> rounds;
  std::vector<double> played_losses;
  std::vector<double> comparator_losses;
  RealVec comparator;      // sign-pattern point, the best fixed point in the box
  double regret = 0;       // sum(played) - sum(comparator)
  double regret_bound = 0; // C * sqrt(2 n T), never exceeded by fixed-rate OGD
};

// Fixed-rate OGD, eta = (C / sqrt(2)) * sqrt(n / T), playing the raw iterate
// against the rotating-spike stream; losses on both sides are measured with
// the production distance evaluator, not the closed form.
AdversarialResult run_adversarial_ogd(int n, long long box_radius, int rounds,
                                      unsigned long long seed);

}  // namespace lnmin

#include "lnmin/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>

#include "lnmin/errors.hpp"
#include "lnmin/mu_bar.hpp"

namespace lnmin {

namespace {

long long stream_weight_scale(const std::vector<MatchingInstance>& stream) {
  long long w = 1;
  for (const MatchingInstance& inst : stream) w = std::max(w, inst.max_abs_weight());
  return w;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace

MatchingInstance generate_instance(int n, long long sigma, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("instance dimension must be even and >= 2");
  if (sigma < 0) throw PreconditionError("noise strength must be non-negative");
  const int half = n / 2;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(half) * half);
  for (int i = 0; i < half; ++i) {
    for (int j = half; j < n; ++j) {
      if (j == i + half) {
        edges.push_back({i, j, 1});
        continue;
      }
      const long long u = sigma == 0 ? 0 : rng.uniform_int(-sigma, sigma);
      const long long w = static_cast<long long>(i + 1) * (j - half + 1) + u;
      if (w > 0) edges.push_back({i, j, w});
    }
  }
  return MatchingInstance(half, half, std::move(edges));
}

std::vector<MatchingInstance> generate_stream(int n, long long sigma, int count,
                                              unsigned long long seed) {
  if (count < 1) throw PreconditionError("stream length must be positive");
  Rng rng(seed);
  std::vector<MatchingInstance> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(generate_instance(n, sigma, rng));
  return out;
}

Method parse_method(const std::string& name) {
  if (name == "mu") return Method::kMuBar;
  if (name == "l1") return Method::kL1;
  if (name == "linf") return Method::kLinf;
  if (name == "cold") return Method::kCold;
  throw PreconditionError("unknown method '" + name + "' (expected mu|l1|linf|cold)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kMuBar: return "mu";
    case Method::kL1: return "l1";
    case Method::kLinf: return "linf";
    case Method::kCold: return "cold";
  }
  throw InternalError("unhandled method tag");
}

IntVec greedy_restore_dual(const MatchingInstance& inst, IntVec point) {
  if (static_cast<int>(point.size()) != inst.n()) {
    throw PreconditionError("dual point dimension mismatch in greedy restoration");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const WeightedEdge& e : inst.edges()) {
      const long long slack = point[e.left] - point[e.right] - e.weight;
      if (slack < 0) {
        point[e.left] -= slack;
        changed = true;
      }
    }
  }
  return point;
}

std::vector<RoundRecord> run_online_rounds(const std::vector<MatchingInstance>& stream,
                                           const CellConfig& cell, const StreamMeta& meta) {
  if (stream.empty()) throw PreconditionError("empty instance stream");
  const int n = stream.front().n();
  const double box = cell.box_radius.value_or(
      static_cast<double>(n) * static_cast<double>(stream_weight_scale(stream)));
  std::optional<LearnerState> learner;
  if (cell.method != Method::kCold) {
    learner.emplace(LearnerState::adaptive(n, box, cell.rho));
  }

  DescentOptions descent_options;
  descent_options.long_step = cell.long_step;

  std::vector<RoundRecord> records;
  records.reserve(stream.size());
  long long iteration_sum = 0;

  for (size_t k = 0; k < stream.size(); ++k) {
    const MatchingInstance& inst = stream[k];
    const int t = static_cast<int>(k) + 1;
    try {
      if (inst.n() != n) throw PreconditionError("stream mixes instance dimensions");
      const RealVec prediction = learner ? learner->anytime_prediction()
                                         : RealVec(static_cast<size_t>(n), 0.0);

      const auto clock_start = std::chrono::steady_clock::now();
      IntVec start;
      if (cell.method == Method::kL1) {
        start = greedy_restore_dual(inst, round_half_down(prediction));
      } else {
        const Projection proj = feasibility_projection(inst, prediction);
        start = round_half_down(proj.point);
      }
      const LnConvexOracle oracle = matching_dual_oracle(inst);
      const DescentResult descent = steepest_descent(oracle, start, descent_options);
      const Matching m_star = extract_primal(inst, descent.minimizer);
      const auto clock_stop = std::chrono::steady_clock::now();

      const InequalitySystem optima = argmin_system_matching(inst, m_star);
      const MuBarEval distance =
          mu_bar_with_subgradient(optima, prediction, to_real(descent.minimizer));

      RoundRecord rec;
      rec.t = t;
      rec.method = method_name(cell.method);
      rec.rho = cell.rho;
      rec.sigma = meta.sigma;
      rec.seed = meta.seed;
      rec.iterations = descent.trace.iterations;
      rec.mu_bar = distance.value;
      rec.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(clock_stop -
                                                                          clock_start)
                        .count();

      switch (cell.method) {
        case Method::kMuBar: {
          rec.loss = distance.value;
          learner->ogd_step(distance.subgradient);
          break;
        }
        case Method::kL1: {
          const LossEval eval = l1_loss(to_real(descent.minimizer), prediction);
          rec.loss = eval.value;
          learner->ogd_step(eval.subgradient);
          break;
        }
        case Method::kLinf: {
          const LossEval eval = linf_loss(to_real(descent.minimizer), prediction);
          rec.loss = eval.value;
          learner->ogd_step(eval.subgradient);
          break;
        }
        case Method::kCold: {
          rec.loss = distance.value;
          break;
        }
      }

      iteration_sum += rec.iterations;
      rec.cum_avg_iterations =
          static_cast<double>(iteration_sum) / static_cast<double>(records.size() + 1);
      records.push_back(std::move(rec));
    } catch (const Error& e) {
      std::cerr << "round " << t << " skipped: " << e.what() << "\n";
    }
  }
  return records;
}

std::vector<RoundRecord> run_online_experiment(const ExperimentConfig& cfg) {
  std::vector<RoundRecord> all;
  for (unsigned long long seed : cfg.seeds) {
    const std::vector<MatchingInstance> stream =
        generate_stream(cfg.n, cfg.sigma, cfg.rounds, seed);
    StreamMeta meta;
    meta.sigma = cfg.sigma;
    meta.seed = seed;
    std::vector<RoundRecord> part = run_online_rounds(stream, cfg.cell, meta);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

void write_csv(std::ostream& out, const std::vector<RoundRecord>& records) {
  out << "t,method,rho,sigma,seed,loss,iterations,mu_bar,cum_avg_iterations,wall_us\n";
  for (const RoundRecord& r : records) {
    out << r.t << ',' << r.method << ',' << format_double(r.rho) << ',' << r.sigma << ','
        << r.seed << ',' << format_double(r.loss) << ',' << r.iterations << ','
        << format_double(r.mu_bar) << ',' << format_double(r.cum_avg_iterations) << ','
        << r.wall_us << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<RoundRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InfeasibleInputError("cannot open CSV output file: " + path);
  write_csv(out, records);
  if (!out.good()) throw InfeasibleInputError("failed writing CSV output file: " + path);
}

std::vector<AdversarialRound> adversarial_sequence(int n, long long box_radius, int rounds,
                                                   unsigned long long seed) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("adversarial dimension must be even");
  if (box_radius < 1) throw PreconditionError("adversarial box radius must be >= 1");
  if (rounds < 1) throw PreconditionError("adversarial round count must be positive");
  const int half = n / 2;
  Rng rng(seed);
  std::vector<AdversarialRound> out;
  out.reserve(static_cast<size_t>(rounds));
  for (int t = 1; t <= rounds; ++t) {
    AdversarialRound r;
    r.coord = (t - 1) % half;
    r.sign = rng.uniform_int(0, 1) == 1 ? 1 : -1;
    r.target.assign(static_cast<size_t>(n), 0);
    r.target[static_cast<size_t>(r.coord)] = 3LL * r.sign * box_radius;
    r.target[static_cast<size_t>(r.coord + half)] = -3LL * r.sign * box_radius;
    out.push_back(std::move(r));
  }
  return out;
}

AdversarialResult run_adversarial_ogd(int n, long long box_radius, int rounds,
                                      unsigned long long seed) {
  AdversarialResult result;
  result.rounds = adversarial_sequence(n, box_radius, rounds, seed);
  const double box = static_cast<double>(box_radius);
  const double eta =
      box / std::sqrt(2.0) * std::sqrt(static_cast<double>(n) / static_cast<double>(rounds));
  LearnerState learner = LearnerState::fixed_rate(n, box, eta);

  result.played_losses.reserve(result.rounds.size());
  for (const AdversarialRound& r : result.rounds) {
    const InequalitySystem target = InequalitySystem::singleton(r.target);
    const MuBarEval eval =
        mu_bar_with_subgradient(target, learner.iterate(), to_real(r.target));
    result.played_losses.push_back(eval.value);
    learner.ogd_step(eval.subgradient);
  }

  const int half = n / 2;
  std::vector<long long> sign_sums(static_cast<size_t>(half), 0);
  for (const AdversarialRound& r : result.rounds) {
    sign_sums[static_cast<size_t>(r.coord)] += r.sign;
  }
  result.comparator.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < half; ++i) {
    const long long x = sign_sums[static_cast<size_t>(i)];
    const double lead = x > 0 ? box : (x < 0 ? -box : 0.0);
    result.comparator[static_cast<size_t>(i)] = lead;
    result.comparator[static_cast<size_t>(i + half)] = -lead;
  }

  result.comparator_losses.reserve(result.rounds.size());
  for (const AdversarialRound& r : result.rounds) {
    const InequalitySystem target = InequalitySystem::singleton(r.target);
    result.comparator_losses.push_back(mu_bar(target, result.comparator, to_real(r.target)));
  }

  result.regret = regret(result.played_losses, result.comparator_losses);
  result.regret_bound = box * std::sqrt(2.0 * static_cast<double>(n) *
                                        static_cast<double>(rounds));
  return result;
}

}  // namespace lnmin

// Command-line front end: instance generation, one-shot solves, distance
// queries, online-learning runs, the adversarial benchmark, and black-box
// recovery of the optimal set. Exit codes follow the library taxonomy:
// 2 unusable input, 3 caller error, 4 internal failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lnmin/argmin_extract.hpp"
#include "lnmin/errors.hpp"
#include "lnmin/experiment.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/mu_bar.hpp"
#include "lnmin/oracle.hpp"
#include "lnmin/steepest_descent.hpp"
#include "lnmin/vectors.hpp"

namespace {

using namespace lnmin;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

RealVec parse_reals(const std::string& text) {
  RealVec out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      throw PreconditionError("empty entry in list '" + text + "'");
    }
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    size_t used = 0;
    double value = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse number '" + token + "'");
    }
    if (used != token.size()) {
      throw PreconditionError("cannot parse number '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw PreconditionError("empty list '" + text + "'");
  return out;
}

MatchingInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InfeasibleInputError("cannot open instance file '" + path + "'");
  return MatchingInstance::read(in);
}

InequalitySystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InfeasibleInputError("cannot open system file '" + path + "'");
  return InequalitySystem::read(in);
}

std::string instance_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "instance_%04d.txt", index);
  return buf;
}

struct Manifest {
  int n = 0;
  long long sigma = 0;
  int count = 0;
  unsigned long long seed = 0;
};

Manifest read_manifest(const std::string& dir) {
  const std::string path = dir + "/manifest.txt";
  std::ifstream in(path);
  if (!in) throw InfeasibleInputError("cannot open manifest '" + path + "'");
  Manifest m;
  bool has_n = false, has_sigma = false, has_count = false, has_seed = false;
  std::string key;
  while (in >> key) {
    if (key == "n") {
      in >> m.n;
      has_n = true;
    } else if (key == "sigma") {
      in >> m.sigma;
      has_sigma = true;
    } else if (key == "count") {
      in >> m.count;
      has_count = true;
    } else if (key == "seed") {
      in >> m.seed;
      has_seed = true;
    } else {
      throw InfeasibleInputError("unknown manifest key '" + key + "'");
    }
    if (!in) throw InfeasibleInputError("malformed manifest '" + path + "'");
  }
  if (!has_n || !has_sigma || !has_count || !has_seed) {
    throw InfeasibleInputError("manifest '" + path + "' is missing a field");
  }
  return m;
}

int run_gen(int n, long long sigma, int count, unsigned long long seed,
            const std::string& out_dir) {
  const auto stream = generate_stream(n, sigma, count, seed);
  std::filesystem::create_directories(out_dir);

  std::ofstream manifest(out_dir + "/manifest.txt");
  if (!manifest) throw InfeasibleInputError("cannot write to '" + out_dir + "'");
  manifest << "n " << n << "\nsigma " << sigma << "\ncount " << count << "\nseed " << seed
           << "\n";

  for (int k = 0; k < count; ++k) {
    const std::string path = out_dir + "/" + instance_file_name(k + 1);
    std::ofstream out(path);
    if (!out) throw InfeasibleInputError("cannot write '" + path + "'");
    stream[static_cast<size_t>(k)].write(out);
  }
  std::cout << "wrote " << count << " instances to " << out_dir << "\n";
  return 0;
}

int run_solve(const std::string& instance_path, const std::optional<std::string>& prediction,
              bool long_step, bool check) {
  const MatchingInstance inst = read_instance_file(instance_path);

  IntVec start;
  if (prediction) {
    const RealVec p_hat = parse_reals(*prediction);
    if (static_cast<int>(p_hat.size()) != inst.n()) {
      throw PreconditionError("prediction has " + std::to_string(p_hat.size()) +
                              " entries, instance needs " + std::to_string(inst.n()));
    }
    const Projection proj = feasibility_projection(inst, p_hat);
    start = round_half_down(proj.point);
    std::cout << "prediction distance " << num(proj.distance) << "\n";
  } else {
    start = trivially_feasible_dual(inst);
  }

  DescentOptions options;
  options.long_step = long_step;
  const DescentResult res = steepest_descent(matching_dual_oracle(inst), start, options);
  const auto value = dual_value(inst, res.minimizer);
  if (!value) throw InternalError("descent returned an infeasible dual");
  const Matching primal = extract_primal(inst, res.minimizer);

  std::cout << "optimal value " << *value << "\n";
  std::cout << "iterations " << res.trace.iterations << "\n";
  std::cout << "dual";
  for (long long v : res.minimizer) std::cout << ' ' << v;
  std::cout << "\nmatching";
  for (const auto& [left, right] : primal.pairs) {
    std::cout << ' ' << left + 1 << '-' << right - inst.n_left() + 1;
  }
  std::cout << "\n";

  if (check) {
    if (inst.n_left() > 10) {
      std::cout << "check skipped: instance too large to enumerate\n";
    } else {
      const BruteForceMatching best = brute_force_matching(inst);
      if (best.weight != *value) {
        throw InternalError("solved value " + std::to_string(*value) +
                            " differs from enumerated optimum " +
                            std::to_string(best.weight));
      }
      std::cout << "check ok: enumerated optimum agrees\n";
    }
  }
  return 0;
}

int run_mu(const std::string& system_path, const std::string& point_text,
           const std::optional<std::string>& witness_text) {
  const InequalitySystem sys = read_system_file(system_path);
  const RealVec point = parse_reals(point_text);
  if (static_cast<int>(point.size()) != sys.dim()) {
    throw PreconditionError("point has " + std::to_string(point.size()) +
                            " entries, system has dimension " + std::to_string(sys.dim()));
  }
  std::optional<RealVec> witness;
  if (witness_text) witness = parse_reals(*witness_text);

  const MuBarEval eval = mu_bar_with_subgradient(sys, point, witness);
  std::cout << "distance " << num(eval.value) << "\n";
  std::cout << "subgradient";
  for (double z : eval.subgradient) std::cout << ' ' << num(z);
  std::cout << "\n";
  return 0;
}

int run_learn(const std::string& dataset, const std::string& method_text, double rho,
              const std::optional<double>& box, bool long_step,
              const std::optional<std::string>& out_path) {
  const Manifest manifest = read_manifest(dataset);
  std::vector<MatchingInstance> stream;
  for (int k = 0; k < manifest.count; ++k) {
    stream.push_back(read_instance_file(dataset + "/" + instance_file_name(k + 1)));
  }

  CellConfig cell;
  cell.method = parse_method(method_text);
  cell.rho = rho;
  cell.box_radius = box;
  cell.long_step = long_step;

  StreamMeta meta;
  meta.sigma = manifest.sigma;
  meta.seed = manifest.seed;

  const auto records = run_online_rounds(stream, cell, meta);
  if (out_path) {
    write_csv_file(*out_path, records);
    double mean = 0;
    for (const RoundRecord& r : records) mean += static_cast<double>(r.iterations);
    if (!records.empty()) mean /= static_cast<double>(records.size());
    std::cout << "rounds " << records.size() << ", mean iterations " << num(mean) << ", csv "
              << *out_path << "\n";
  } else {
    write_csv(std::cout, records);
  }
  return 0;
}

int run_adversary(int n, long long box, int rounds, unsigned long long seed,
                  const std::optional<std::string>& out_path) {
  const AdversarialResult res = run_adversarial_ogd(n, box, rounds, seed);
  std::cout << "regret " << num(res.regret) << "\n";
  std::cout << "bound " << num(res.regret_bound) << "\n";
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw InfeasibleInputError("cannot write '" + *out_path + "'");
    out << "t,coord,sign,played_loss,comparator_loss\n";
    for (size_t t = 0; t < res.rounds.size(); ++t) {
      out << t + 1 << ',' << res.rounds[t].coord << ',' << res.rounds[t].sign << ','
          << num(res.played_losses[t]) << ',' << num(res.comparator_losses[t]) << "\n";
    }
  }
  return 0;
}

void write_system(const InequalitySystem& sys, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw InfeasibleInputError("cannot write '" + *out_path + "'");
    sys.write(out);
  } else {
    sys.write(std::cout);
  }
}

// Direct route: solve once, read the optimal matching off the tight subgraph,
// and emit the complementary-slackness description of the optimal-dual set.
int run_extract_direct(const std::string& instance_path,
                       const std::optional<std::string>& out_path) {
  const MatchingInstance inst = read_instance_file(instance_path);
  DescentOptions options;
  options.long_step = true;
  const DescentResult res =
      steepest_descent(matching_dual_oracle(inst), trivially_feasible_dual(inst), options);
  const Matching primal = extract_primal(inst, res.minimizer);
  write_system(argmin_system_matching(inst, primal), out_path);
  return 0;
}

// Value-query route: forget the matching structure and rebuild the same set
// from objective evaluations alone. Guarded by --max-n, the query count grows
// quadratically in dimension with a log factor per recovered bound.
int run_extract_blackbox(const std::string& instance_path, int max_n,
                         const std::optional<std::string>& out_path) {
  const MatchingInstance inst = read_instance_file(instance_path);
  if (inst.n() > max_n) {
    throw PreconditionError("instance dimension " + std::to_string(inst.n()) +
                            " exceeds --max-n " + std::to_string(max_n));
  }

  BlackBoxOracle oracle;
  oracle.dimension = inst.n();
  oracle.box_radius =
      static_cast<long long>(inst.n()) * std::max<long long>(1, inst.max_abs_weight());
  oracle.feasible_start = trivially_feasible_dual(inst);
  oracle.value = [&inst](const IntVec& p) { return dual_value(inst, p); };

  ExtractStats stats;
  const InequalitySystem sys = extract_argmin_system(oracle, &stats);
  write_system(sys, out_path);
  std::cerr << "value queries " << stats.validity_checks << ", descent runs "
            << stats.descent_runs << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prediction-warm-started dual solver for weighted perfect matching"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance stream into a directory");
  int gen_n = 10;
  long long gen_sigma = 5;
  int gen_count = 20;
  unsigned long long gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "total vertex count, even")->required();
  gen->add_option("--sigma", gen_sigma, "weight noise half-width")->required();
  gen->add_option("--count", gen_count, "number of instances")->required();
  gen->add_option("--seed", gen_seed, "stream seed");
  gen->add_option("--out", gen_out, "output directory")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "minimize the dual of one instance");
  std::string solve_instance;
  std::string solve_prediction;
  bool solve_long = false;
  bool solve_check = false;
  solve->add_option("--instance", solve_instance, "instance file")->required();
  auto* solve_pred_opt =
      solve->add_option("--prediction", solve_prediction,
                        "comma-separated warm-start point, s entries then t entries");
  solve->add_flag("--long-step", solve_long,
                  "take maximal-length steps instead of unit steps");
  solve->add_flag("--check", solve_check, "cross-check against exhaustive enumeration");

  // mu
  auto* mu = app.add_subcommand("mu", "distance from a point to a difference system");
  std::string mu_system, mu_point, mu_witness;
  mu->add_option("--system", mu_system, "system file")->required();
  mu->add_option("--point", mu_point, "comma-separated query point")->required();
  auto* mu_wit_opt = mu->add_option("--witness", mu_witness,
                                    "comma-separated known member, enables the fast path");

  // learn
  auto* learn = app.add_subcommand("learn", "online warm-start run over a dataset");
  std::string learn_dataset, learn_loss = "mu", learn_out;
  double learn_rho = 0.1;
  double learn_box = 0;
  bool learn_long = false;
  learn->add_option("--dataset", learn_dataset, "directory created by gen")->required();
  learn->add_option("--loss,--method", learn_loss, "mu | l1 | linf | cold");
  learn->add_option("--rho", learn_rho, "adaptive learning-rate scale");
  auto* learn_box_opt =
      learn->add_option("--C,--box", learn_box, "override the learner box radius");
  learn->add_flag("--long-step", learn_long,
                  "take maximal-length steps instead of unit steps");
  auto* learn_out_opt = learn->add_option("--out", learn_out, "write CSV here, not stdout");

  // adversary
  auto* adv = app.add_subcommand("adversary", "fixed-rate online descent vs rotating spikes");
  int adv_n = 2;
  long long adv_box = 1;
  int adv_rounds = 64;
  unsigned long long adv_seed = 1;
  std::string adv_out;
  adv->add_option("--n", adv_n, "dimension, even")->required();
  adv->add_option("--C,--box", adv_box, "box radius")->required();
  adv->add_option("--T,--rounds", adv_rounds, "number of rounds")->required();
  adv->add_option("--seed", adv_seed, "sign seed");
  auto* adv_out_opt = adv->add_option("--out", adv_out, "per-round CSV file");

  // extract-argmin
  auto* extract = app.add_subcommand(
      "extract-argmin", "emit an inequality description of the optimal-dual set");
  std::string extract_instance, extract_blackbox, extract_out;
  int extract_max_n = 16;
  auto* extract_inst_opt = extract->add_option(
      "--instance", extract_instance, "instance file, read the set off the tight subgraph");
  auto* extract_bb_opt = extract->add_option(
      "--blackbox", extract_blackbox, "instance file, rebuild the set from value queries only");
  extract->add_option("--max-n", extract_max_n,
                      "refuse value-query extraction above this dimension");
  auto* extract_out_opt =
      extract->add_option("--out", extract_out, "write the system here, not stdout");
  extract_inst_opt->excludes(extract_bb_opt);

  try {
    app.parse(argc, argv);

    if (gen->parsed()) return run_gen(gen_n, gen_sigma, gen_count, gen_seed, gen_out);
    if (solve->parsed()) {
      std::optional<std::string> pred;
      if (solve_pred_opt->count() > 0) pred = solve_prediction;
      return run_solve(solve_instance, pred, solve_long, solve_check);
    }
    if (mu->parsed()) {
      std::optional<std::string> wit;
      if (mu_wit_opt->count() > 0) wit = mu_witness;
      return run_mu(mu_system, mu_point, wit);
    }
    if (learn->parsed()) {
      std::optional<double> box;
      if (learn_box_opt->count() > 0) box = learn_box;
      std::optional<std::string> out;
      if (learn_out_opt->count() > 0) out = learn_out;
      return run_learn(learn_dataset, learn_loss, learn_rho, box, learn_long, out);
    }
    if (adv->parsed()) {
      std::optional<std::string> out;
      if (adv_out_opt->count() > 0) out = adv_out;
      return run_adversary(adv_n, adv_box, adv_rounds, adv_seed, out);
    }
    if (extract->parsed()) {
      std::optional<std::string> out;
      if (extract_out_opt->count() > 0) out = extract_out;
      if (extract_bb_opt->count() > 0) {
        return run_extract_blackbox(extract_blackbox, extract_max_n, out);
      }
      if (extract_inst_opt->count() == 0) {
        throw PreconditionError("extract-argmin needs --instance or --blackbox");
      }
      return run_extract_direct(extract_instance, out);
    }
    return 3;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const lnmin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

#include "lnmin/inequality_system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lnmin/errors.hpp"

namespace lnmin {

InequalitySystem::InequalitySystem(int n) : n_(n), alpha_(n), beta_(n) {
  if (n < 1) throw PreconditionError("InequalitySystem: dimension must be positive");
}

void InequalitySystem::check_index(int i) const {
  if (i < 0 || i >= n_) throw PreconditionError("InequalitySystem: index out of range");
}

void InequalitySystem::set_alpha(int i, long long value) {
  check_index(i);
  if (!alpha_[i] || *alpha_[i] < value) alpha_[i] = value;
}

void InequalitySystem::set_beta(int i, long long value) {
  check_index(i);
  if (!beta_[i] || *beta_[i] > value) beta_[i] = value;
}

void InequalitySystem::add_gamma(int i, int j, long long value) {
  check_index(i);
  check_index(j);
  if (i == j) throw PreconditionError("InequalitySystem: difference bound needs distinct indices");
  auto [it, inserted] = gamma_.try_emplace({i, j}, value);
  if (!inserted && value < it->second) it->second = value;
}

const std::optional<long long>& InequalitySystem::alpha(int i) const {
  check_index(i);
  return alpha_[i];
}

const std::optional<long long>& InequalitySystem::beta(int i) const {
  check_index(i);
  return beta_[i];
}

std::optional<long long> InequalitySystem::gamma(int i, int j) const {
  check_index(i);
  check_index(j);
  auto it = gamma_.find({i, j});
  if (it == gamma_.end()) return std::nullopt;
  return it->second;
}

std::vector<DiffBound> InequalitySystem::difference_bounds() const {
  std::vector<DiffBound> out;
  out.reserve(gamma_.size());
  for (const auto& [key, bound] : gamma_) out.push_back({key.first, key.second, bound});
  return out;
}

int InequalitySystem::finite_bound_count() const {
  int count = static_cast<int>(gamma_.size());
  for (int i = 0; i < n_; ++i) {
    if (alpha_[i]) ++count;
    if (beta_[i]) ++count;
  }
  return count;
}

bool InequalitySystem::contains(const IntVec& p) const {
  if (static_cast<int>(p.size()) != n_)
    throw PreconditionError("InequalitySystem::contains: dimension mismatch");
  for (int i = 0; i < n_; ++i) {
    if (alpha_[i] && p[i] < *alpha_[i]) return false;
    if (beta_[i] && p[i] > *beta_[i]) return false;
  }
  for (const auto& [key, bound] : gamma_) {
    if (p[key.second] - p[key.first] > bound) return false;
  }
  return true;
}

bool InequalitySystem::contains(const RealVec& p, double tol) const {
  if (static_cast<int>(p.size()) != n_)
    throw PreconditionError("InequalitySystem::contains: dimension mismatch");
  for (int i = 0; i < n_; ++i) {
    if (alpha_[i] && p[i] < static_cast<double>(*alpha_[i]) - tol) return false;
    if (beta_[i] && p[i] > static_cast<double>(*beta_[i]) + tol) return false;
  }
  for (const auto& [key, bound] : gamma_) {
    if (p[key.second] - p[key.first] > static_cast<double>(bound) + tol) return false;
  }
  return true;
}

InequalitySystem InequalitySystem::singleton(const IntVec& point) {
  InequalitySystem sys(static_cast<int>(point.size()));
  for (int i = 0; i < sys.dim(); ++i) {
    sys.set_alpha(i, point[i]);
    sys.set_beta(i, point[i]);
  }
  return sys;
}

InequalitySystem InequalitySystem::read(std::istream& in) {
  std::optional<InequalitySystem> sys;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InfeasibleInputError("system file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tok(line);
    std::string key;
    if (!(tok >> key)) continue;
    if (key == "n") {
      int n = 0;
      if (!(tok >> n) || n < 1) fail("bad dimension");
      if (sys) fail("duplicate n line");
      sys.emplace(n);
    } else if (key == "alpha" || key == "beta") {
      if (!sys) fail("bound before n line");
      int i = 0;
      long long v = 0;
      if (!(tok >> i >> v) || i < 1 || i > sys->dim()) fail("bad " + key + " entry");
      if (key == "alpha")
        sys->set_alpha(i - 1, v);
      else
        sys->set_beta(i - 1, v);
    } else if (key == "gamma") {
      if (!sys) fail("bound before n line");
      int i = 0, j = 0;
      long long v = 0;
      if (!(tok >> i >> j >> v) || i < 1 || i > sys->dim() || j < 1 || j > sys->dim() || i == j)
        fail("bad gamma entry");
      sys->add_gamma(i - 1, j - 1, v);
    } else {
      fail("unknown directive '" + key + "'");
    }
    std::string extra;
    if (tok >> extra) fail("trailing tokens");
  }
  if (!sys) throw InfeasibleInputError("system file: missing n line");
  return *sys;
}

void InequalitySystem::write(std::ostream& out) const {
  out << "n " << n_ << "\n";
  for (int i = 0; i < n_; ++i)
    if (alpha_[i]) out << "alpha " << (i + 1) << " " << *alpha_[i] << "\n";
  for (int i = 0; i < n_; ++i)
    if (beta_[i]) out << "beta " << (i + 1) << " " << *beta_[i] << "\n";
  for (const auto& [key, bound] : gamma_)
    out << "gamma " << (key.first + 1) << " " << (key.second + 1) << " " << bound << "\n";
}

InequalitySystem InequalitySystem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InfeasibleInputError("cannot open system file: " + path);
  return read(in);
}

void InequalitySystem::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write system file: " + path);
  write(out);
}

}  // namespace lnmin

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "lnmin/errors.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/mu_bar.hpp"
#include "lnmin/oracle.hpp"
#include "lnmin/rng.hpp"
#include "test_fixtures.hpp"

using namespace lnmin;

TEST_CASE("assignment enumeration finds the heaviest perfect matching") {
  const BruteForceMatching small = brute_force_matching(fixtures::two_by_two());
  CHECK(small.weight == 4);
  CHECK(small.matching.pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  const MatchingInstance lone(1, 1, {{0, 1, 7}});
  const BruteForceMatching one = brute_force_matching(lone);
  CHECK(one.weight == 7);
  CHECK(one.matching.pairs == std::vector<std::pair<int, int>>{{0, 1}});

  std::vector<WeightedEdge> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) edges.push_back({i, 3 + j, (i + 1) * (j + 1)});
  const BruteForceMatching sorted = brute_force_matching(MatchingInstance(3, 3, edges));
  CHECK(sorted.weight == 14);  // aligned pairing beats every other permutation
  CHECK(sorted.matching.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("assignment enumeration is deterministic and gated") {
  Rng rng(41);
  const auto inst = fixtures::random_instance(rng, 5, 9);
  const BruteForceMatching a = brute_force_matching(inst);
  const BruteForceMatching b = brute_force_matching(inst);
  CHECK(a.weight == b.weight);
  CHECK(a.matching.pairs == b.matching.pairs);

  std::vector<WeightedEdge> backbone;
  for (int i = 0; i < 11; ++i) backbone.push_back({i, 11 + i, 1});
  const MatchingInstance big(11, 11, backbone);
  CHECK_THROWS_AS(brute_force_matching(big), PreconditionError);
}

TEST_CASE("boxed enumeration of the distance to the member set") {
  CHECK(brute_force_mu(fixtures::box_only_system(), {1, 1}, 2) == 0);
  CHECK(brute_force_mu(fixtures::box_only_system(), {3, -1}, 5) == 3);
  CHECK(brute_force_mu(fixtures::fig2_reduced(), {2, -2}, 8) == 2);
  CHECK(brute_force_mu(fixtures::fig2_system(), {2, -2}, 8) == 2);
  CHECK_FALSE(brute_force_mu(fixtures::box_only_system(), {30, 0}, 3).has_value());
}

TEST_CASE("boxed enumeration respects its gates") {
  const InequalitySystem wide(7);
  CHECK_THROWS_AS(brute_force_mu(wide, IntVec(7, 0), 1), PreconditionError);
  const InequalitySystem narrow(1);
  CHECK_THROWS_AS(brute_force_mu(narrow, {0}, 9), PreconditionError);
  CHECK_THROWS_AS(brute_force_mu(narrow, {0, 0}, 3), PreconditionError);
}

TEST_CASE("boxed enumeration matches the all-pairs reference") {
  Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const auto planted = fixtures::random_system(rng, static_cast<int>(rng.uniform_int(1, 4)));
    IntVec point = planted.witness;
    for (auto& x : point) x += rng.uniform_int(-3, 3);
    const auto boxed = brute_force_mu(planted.system, point, 8);
    REQUIRE(boxed.has_value());
    CHECK(*boxed == fixtures::reference_mu(planted.system, point));
  }
}

TEST_CASE("path enumeration on the worked two-variable example") {
  const AuxiliaryGraph graph(fixtures::fig2_system(), RealVec{2.0, -2.0});
  const EnumeratedPaths paths = brute_force_paths(graph);
  CHECK(paths.min_weight == doctest::Approx(-2.0));
  REQUIRE(paths.shortest.size() == 2);

  std::set<std::vector<int>> seqs;
  for (const PathWitness& p : paths.shortest) {
    seqs.insert(p.vertices);
    CHECK(p.weight == doctest::Approx(-2.0));
    CHECK(p.entry == 1);
    CHECK(p.exit == 0);
  }
  const int anchor = graph.anchor(), origin = graph.origin(), dest = graph.destination();
  CHECK(seqs.count({origin, 1, 0, dest}) == 1);
  CHECK(seqs.count({origin, 1, anchor, 0, dest}) == 1);
}

TEST_CASE("path enumeration at a member point stays on the zero fans") {
  const AuxiliaryGraph graph(fixtures::fig2_system(), RealVec{0.0, 0.0});
  const EnumeratedPaths paths = brute_force_paths(graph);
  CHECK(paths.min_weight == doctest::Approx(0.0));
  CHECK(paths.shortest.size() == 3);  // one two-hop path through each fan vertex
  for (const PathWitness& p : paths.shortest) {
    CHECK(p.vertices.size() == 3);
    CHECK(p.entry == p.exit);
  }
}

TEST_CASE("path enumeration finds the unique detour through the anchor") {
  const AuxiliaryGraph graph(fixtures::box_only_system(), RealVec{3.0, -1.0});
  const EnumeratedPaths paths = brute_force_paths(graph);
  CHECK(paths.min_weight == doctest::Approx(-3.0));
  REQUIRE(paths.shortest.size() == 1);
  const PathWitness& p = paths.shortest[0];
  CHECK(p.vertices == std::vector<int>{graph.origin(), 1, graph.anchor(), 0, graph.destination()});
  CHECK(p.entry == 1);
  CHECK(p.exit == 0);
}

TEST_CASE("path enumeration is gated by vertex count") {
  const InequalitySystem wide(6);
  const AuxiliaryGraph graph(wide, RealVec(6, 0.0));
  CHECK(graph.num_vertices() == 9);
  CHECK_THROWS_AS(brute_force_paths(graph), PreconditionError);
}

TEST_CASE("gated neighborhood scan is the solver scan") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = fixtures::random_instance(rng, static_cast<int>(rng.uniform_int(1, 4)), 5);
    const IntVec p = fixtures::random_feasible_dual(inst, rng, 3);
    const LnConvexOracle g = matching_dual_oracle(inst);
    const LocalDirection a = brute_force_local_direction(g, p);
    const LocalDirection b = exhaustive_local_direction(g, p);
    CHECK(a.slope == b.slope);
    CHECK(a.direction == b.direction);
  }

  LnConvexOracle wide;
  wide.dimension = 13;
  wide.flavor = ConvexFlavor::kLNatural;
  wide.value = [](const IntVec&) -> std::optional<long long> { return 0; };
  CHECK_THROWS_AS(brute_force_local_direction(wide, IntVec(13, 0)), PreconditionError);
}

#include "doctest.h"
#include "grestrict/classify.hpp"
#include "grestrict/group_spec.hpp"
#include "oracles.hpp"

using namespace grestrict;
using namespace grestrict::fixtures;

TEST_CASE("analysis of L0") {
  auto a = analyze_local_group(L0());
  CHECK(a.k() == 2);
  CHECK(a.orbit_reps == std::vector<Point>{2, 0});
  CHECK(a.stabiliser_orders.front() == 2);
  CHECK(a.stabiliser_orders.back() == 1);
  CHECK(a.verdict == Verdict::kNotRestrictive);
  REQUIRE(a.semiprimitive);
  CHECK(*a.semiprimitive == a.semiregular);
}

TEST_CASE("analysis of L1 picks the largest stabiliser") {
  auto a = analyze_local_group(L1());
  CHECK(a.orbit_reps == std::vector<Point>{3, 0});
  CHECK(a.stabiliser_orders.front() == 3);
  CHECK(a.stabiliser_orders.back() == 2);
  CHECK(a.verdict == Verdict::kNotRestrictive);
}

TEST_CASE("verdicts of the named groups") {
  CHECK(analyze_local_group(L2()).verdict == Verdict::kRestrictiveSemiregular);
  CHECK(analyze_local_group(L3()).verdict == Verdict::kOutOfScopeTransitive);
  CHECK(analyze_local_group(PermutationGroup::trivial(3)).verdict ==
        Verdict::kRestrictiveSemiregular);
  CHECK(to_string(Verdict::kNotRestrictive) == "NOT_RESTRICTIVE");
}

TEST_CASE("restrictive verdict reports") {
  auto r2 = restrictive_verdict(analyze_local_group(L2()));
  REQUIRE(r2.bound);
  CHECK(*r2.bound == 4);
  CHECK(r2.summary == "graph-restrictive (semiregular, c(L) = 4)");

  auto r0 = restrictive_verdict(analyze_local_group(L0()));
  CHECK(r0.summary == "not graph-restrictive; |G_v| = 2·2^n realizable");
  CHECK(*r0.witness_base == 2);
  CHECK(*r0.witness_ratio == 2);

  auto r1 = restrictive_verdict(analyze_local_group(L1()));
  CHECK(r1.summary == "not graph-restrictive; |G_v| = 6·3^n realizable");

  auto r3 = restrictive_verdict(analyze_local_group(L3()));
  CHECK(r3.summary == "transitive: outside this tool's scope");
}

TEST_CASE("classification invariants on random intransitive groups") {
  std::mt19937_64 rng(11);
  int intransitive = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t degree = 3 + static_cast<std::size_t>(trial % 5);
    auto g = oracle::random_subgroup(rng, degree, 2000);
    auto a = analyze_local_group(g);
    CAPTURE(format_group_spec(g));
    auto pred = predicates(g);
    if (pred.is_transitive) {
      CHECK(a.verdict == Verdict::kOutOfScopeTransitive);
      continue;
    }
    ++intransitive;
    CHECK((a.verdict == Verdict::kRestrictiveSemiregular) == pred.is_semiregular);
    CHECK((a.verdict == Verdict::kNotRestrictive) == !pred.is_semiregular);
    REQUIRE(a.semiprimitive);
    CHECK(*a.semiprimitive == a.semiregular);
    // One representative per orbit.
    CHECK(a.k() == orbits(g).size());
    for (std::size_t i = 0; i < a.k(); ++i) {
      CHECK(std::binary_search(a.orbits[i].begin(), a.orbits[i].end(), a.orbit_reps[i]));
      CHECK(a.stabiliser_orders[0] >= a.stabiliser_orders[i]);
    }
    if (a.verdict == Verdict::kNotRestrictive) {
      for (Point p = 0; p < degree; ++p) {
        BigInt o = point_stabiliser(g, p).order();
        CHECK(o <= a.stabiliser_orders[0]);
        if (o == a.stabiliser_orders[0]) CHECK(p >= a.orbit_reps[0]);
      }
    }
  }
  CHECK(intransitive > 20);
}

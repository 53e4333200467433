#include <set>

#include "doctest.h"
#include "grestrict/completion.hpp"
#include "grestrict/errors.hpp"
#include "oracles.hpp"

using namespace grestrict;
using namespace grestrict::fixtures;

namespace {

std::shared_ptr<const AmalgamStar> star(const PermutationGroup& L, std::size_t n) {
  return std::make_shared<const AmalgamStar>(analyze_local_group(L), n);
}

std::shared_ptr<const Carrier> carrier(const PermutationGroup& L, std::size_t n,
                                       std::size_t t) {
  return std::make_shared<const Carrier>(star(L, n), t);
}

// rho(c) for every c in C_edge is conjugated by beta onto rho(phi(c)).
void check_contract(const Carrier& c, std::size_t edge, const Permutation& beta) {
  const auto& s = c.star();
  CHECK((beta * beta).is_identity());
  for (auto x : s.edge_elements(edge)) {
    CHECK(beta * c.rho(x) * beta == c.rho(s.phi(edge, x)));
  }
}

std::size_t cycles_of_length(const Permutation& p, std::size_t len) {
  std::size_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t l = 0;
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      ++l;
    }
    count += l == len;
  }
  return count;
}

}  // namespace

TEST_CASE("regular carrier") {
  auto c1 = carrier(L0(), 2, 1);
  CHECK(c1->degree() == 8);
  const auto& head = c1->rho_generators().front();
  CHECK(cycles_of_length(head, 2) == 4);
  CHECK(cycles_of_length(head, 1) == 0);
  CHECK(c1->rho_group().order() == 8);

  auto c2 = carrier(L0(), 2, 2);
  CHECK(c2->degree() == 16);
  auto parts = orbits(c2->rho_group());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 8);
  CHECK(parts[1].size() == 8);

  CHECK(carrier(L1(), 2, 1)->degree() == 54);
  CHECK_THROWS_AS(Carrier(star(L1(), 2), 2, 100), CapacityError);
  CHECK_THROWS_AS(Carrier(star(L1(), 2), 0), InputError);

  for (AmalgamStar::Index a = 0; a < c1->star().order(); ++a) {
    CHECK(c1->rho_preimage(c1->rho(a)) == a);
  }
  CHECK_FALSE(c1->rho_preimage(Permutation(parse_permutation("(1 2)", 8))));
}

TEST_CASE("involution on the full-reversal edge") {
  auto c = carrier(L0(), 2, 1);
  auto s = default_strategy(c->star(), 1);
  CHECK(s.pairing[0] == std::vector<std::uint32_t>{0});
  auto beta = build_involution(*c, 0, s);
  for (AmalgamStar::Index a = 0; a < 8; ++a) CHECK(beta(a) == c->star().phi(0, a));
  check_contract(*c, 0, beta);
}

TEST_CASE("involution swapping the two tail-edge orbits") {
  auto c = carrier(L0(), 2, 1);
  auto s = default_strategy(c->star(), 1);
  s.pairing[1] = {1, 0};
  auto beta = build_involution(*c, 1, s);
  auto reps = left_coset_representatives(c->star(), 1);
  REQUIRE(reps.size() == 2);
  // Each point moves to the other left coset of C_2.
  std::vector<int> coset(8, -1);
  for (int q = 0; q < 2; ++q) {
    for (auto x : c->star().edge_elements(1)) coset[c->multiply(reps[q], x)] = q;
  }
  for (Point p = 0; p < 8; ++p) CHECK(coset[beta(p)] != coset[p]);
  check_contract(*c, 1, beta);
}

TEST_CASE("copy swap on an untwisted edge of index one") {
  auto L = group("degree 4\n(1 2)\n");
  auto st = star(L, 2);
  REQUIRE(st->k() == 3);
  CHECK(st->edge_index(2) == 1);
  auto s = default_strategy(*st);
  CHECK(s.t == 2);
  auto c = std::make_shared<const Carrier>(st, 2);
  auto beta = build_involution(*c, 2, s);
  std::size_t N = st->order();
  for (Point p = 0; p < 2 * N; ++p) CHECK(beta(p) == (p + N) % (2 * N));
  for (const auto& r : c->rho_generators()) CHECK(beta * r == r * beta);
  CHECK_FALSE(c->rho_preimage(beta));
}

TEST_CASE("malformed strategies are rejected") {
  auto c = carrier(L0(), 2, 1);
  auto s = default_strategy(c->star(), 1);
  auto bad = s;
  bad.pairing[1] = {1, 1};
  CHECK_THROWS_AS(build_involution(*c, 1, bad), InputError);
  bad = s;
  bad.offsets[1][0] = 4;  // head (1 2) moves w_2
  CHECK_THROWS_AS(build_involution(*c, 1, bad), InputError);
  CHECK_THROWS_AS(build_involution(*carrier(L0(), 2, 2), 1, s), InputError);
}

TEST_CASE("verification failures") {
  auto search = find_completion(star(L0(), 2));
  REQUIRE(search.accepted());
  auto cand = *search.candidate;

  // beta merely normalising rho(A) on an edge of index 2.
  auto normalising = cand;
  normalising.beta[1] = Permutation(cand.carrier->degree());
  normalising.generated.emplace(cand.carrier->degree(), normalising.group_generators());
  auto r = verify_completion(normalising);
  CHECK_FALSE(r.edges[1].v1);
  CHECK_FALSE(r.edges[1].v2);
  CHECK_FALSE(r.accepted());

  // Identity on an untwisted edge.
  auto s4 = find_completion(star(group("degree 4\n(1 2)\n"), 2));
  REQUIRE(s4.accepted());
  auto c4 = *s4.candidate;
  c4.beta[2] = Permutation(c4.carrier->degree());
  c4.generated.emplace(c4.carrier->degree(), c4.group_generators());
  auto r4 = verify_completion(c4);
  CHECK_FALSE(r4.edges[2].v2);
  CHECK(r4.first_failure() == "V2 on edge 3");
}

TEST_CASE("accepted completions agree with brute-force checks") {
  auto search = find_completion(star(L0(), 2));
  REQUIRE(search.accepted());
  const auto& cand = *search.candidate;
  const auto& report = *search.report;
  const Carrier& c = *cand.carrier;
  const auto& s = c.star();
  std::size_t deg = c.degree();

  CHECK(report.accepted());
  CHECK(*report.group_order % 8 == 0);
  for (std::size_t e = 0; e < s.k(); ++e) check_contract(c, e, cand.beta[e]);

  auto rhoA = oracle::closure(deg, c.rho_generators());
  REQUIRE(rhoA.size() == 8);
  auto G = oracle::closure(deg, cand.group_generators());
  CHECK(G.size() == *report.group_order);

  // V1: rho(A) n rho(A)^beta has order |C_i|.
  for (std::size_t e = 0; e < s.k(); ++e) {
    std::size_t both = 0;
    for (const auto& x : rhoA) both += rhoA.contains(cand.beta[e] * x * cand.beta[e]);
    CHECK(both == s.edge_order(e));
  }
  // V3: core of rho(A) in G.
  CHECK(oracle::core_by_conjugates(G, rhoA).size() == 1);
  // V4: the |Omega| cosets rho(A) beta_i rho(a) are distinct.
  auto model = local_model(s);
  std::set<std::set<Permutation>> cosets;
  for (const auto& nb : model.neighbours) {
    std::set<Permutation> coset;
    for (const auto& x : rhoA) coset.insert(x * cand.beta[nb.edge] * c.rho(nb.rep));
    cosets.insert(coset);
  }
  CHECK(cosets.size() == 3);
}

TEST_CASE("search across the named families") {
  for (std::size_t n : {2, 3, 4}) {
    auto search = find_completion(star(L0(), n));
    REQUIRE(search.accepted());
    CHECK(search.candidate->strategy.t <= 2);
    CHECK(*search.report->group_order % search.report->a_order == 0);
  }
  auto s1 = find_completion(star(L1(), 2));
  REQUIRE(s1.accepted());
  CHECK(s1.report->a_order == 54);
}

TEST_CASE("search exhaustion is structured") {
  CompletionConfig config;
  config.max_attempts = 0;
  auto none = find_completion(star(L0(), 2), config);
  CHECK_FALSE(none.accepted());
  CHECK(none.attempts.empty());

  config.max_attempts = 3;
  auto few = find_completion(star(L0(), 2), config);
  CHECK_FALSE(few.accepted());
  REQUIRE(few.attempts.size() == 3);
  CHECK(few.attempts[0].label == "default");
  CHECK(few.attempts[0].failure == "V1 on edge 2");
}

TEST_CASE("search is deterministic per seed") {
  CompletionConfig config;
  config.seed = 7;
  auto a = find_completion(star(L0(), 3), config);
  auto b = find_completion(star(L0(), 3), config);
  REQUIRE(a.accepted());
  REQUIRE(b.accepted());
  CHECK(a.candidate->beta == b.candidate->beta);
  CHECK(a.candidate->strategy.label == b.candidate->strategy.label);
}

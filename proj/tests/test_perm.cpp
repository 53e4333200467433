#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "grestrict/errors.hpp"
#include "grestrict/group_spec.hpp"
#include "grestrict/perm_group.hpp"
#include "oracles.hpp"

using namespace grestrict;
using namespace grestrict::fixtures;

namespace {

Permutation cyc(std::size_t degree, const char* text) {
  return parse_permutation(text, degree);
}

std::vector<std::vector<Point>> one_based(std::vector<std::vector<Point>> parts) {
  for (auto& part : parts) {
    for (auto& p : part) p += 1;
  }
  return parts;
}

}  // namespace

TEST_CASE("permutation composition acts on the right") {
  auto a = cyc(3, "(1 2)");
  auto b = cyc(3, "(2 3)");
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)(0) == 2);
  CHECK((a * b).to_cycle_string() == "(1 3 2)");
  CHECK((a * a).is_identity());
  CHECK(a.inverse() == a);
  CHECK(cyc(5, "2 1 3 5 4") == cyc(5, "(1 2)(4 5)"));
  CHECK(cyc(3, "()").is_identity());
}

TEST_CASE("permutation parsing reports positions") {
  CHECK_THROWS_AS(cyc(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(cyc(3, "(1 1)"), ParseError);
  CHECK_THROWS_AS(cyc(3, "1 2"), ParseError);
  CHECK_THROWS_AS(cyc(3, "1 1 2"), ParseError);
  try {
    parse_group_spec("degree 3\n(1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_group_spec("(1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("degree 0\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
}

TEST_CASE("group spec text round-trips") {
  auto g = parse_group_spec("# L1\ndegree 5\n(1 2 3)(4 5)  # generator\n\n2 1 3 4 5\n");
  CHECK(g.degree() == 5);
  CHECK(g.generators().size() == 2);
  auto again = parse_group_spec(format_group_spec(g));
  CHECK(again.generators() == g.generators());
  auto images = parse_group_spec(format_group_spec_images(g));
  CHECK(images.generators() == g.generators());
}

TEST_CASE("orbits") {
  CHECK(one_based(orbits(L0())) == std::vector<std::vector<Point>>{{1, 2}, {3}});
  CHECK(one_based(orbits(L1())) ==
        std::vector<std::vector<Point>>{{1, 2, 3}, {4, 5}});
  CHECK(one_based(orbits(PermutationGroup::trivial(2))) ==
        std::vector<std::vector<Point>>{{1}, {2}});
}

TEST_CASE("order and membership") {
  CHECK(L1().order() == 6);
  CHECK(S3().order() == 6);
  CHECK(PermutationGroup::trivial(4).order() == 1);
  CHECK(L1().contains(cyc(5, "(1 3 2)")));
  CHECK_FALSE(L1().contains(cyc(5, "(1 2)")));
  CHECK(L1().contains(cyc(5, "(4 5)")));
}

TEST_CASE("stabiliser chain invariants") {
  auto g = parse_group_spec("degree 7\n(1 2 3 4 5 6 7)\n(1 2)\n");
  const auto& chain = g.chain();
  CHECK(chain.order() == 5040);
  for (std::size_t l = 0; l < chain.depth(); ++l) {
    const auto& level = chain.level(l);
    for (Point p : level.orbit) {
      CHECK(level.representative(p)(level.base_point) == p);
    }
  }
  for (const auto& gen : g.generators()) CHECK(chain.sift(gen).first.is_identity());
  auto x = cyc(7, "(1 5)(2 7 3)");
  std::vector<Point> images;
  for (Point b : chain.base()) images.push_back(x(b));
  CHECK(chain.element_from_base_images(images) == x);
}

TEST_CASE("point stabilisers") {
  auto s4 = point_stabiliser(L1(), 3);
  CHECK(s4.order() == 3);
  CHECK(s4.contains(cyc(5, "(1 2 3)")));
  CHECK(point_stabiliser(L0(), 2).order() == 2);
  CHECK(point_stabiliser(L0(), 0).order() == 1);
  CHECK_THROWS_AS(point_stabiliser(L0(), 3), InputError);
}

TEST_CASE("transitivity and semiregularity") {
  auto p2 = predicates(L2());
  CHECK_FALSE(p2.is_transitive);
  CHECK(p2.is_semiregular);
  auto p0 = predicates(L0());
  CHECK_FALSE(p0.is_transitive);
  CHECK_FALSE(p0.is_semiregular);
  auto p3 = predicates(L3());
  CHECK(p3.is_transitive);
  CHECK(p3.is_semiregular);
}

TEST_CASE("normal closure") {
  CHECK(normal_closure(S3(), cyc(3, "(1 2 3)")).order() == 3);
  CHECK(normal_closure(S3(), cyc(3, "(1 2)")).order() == 6);
  CHECK(normal_closure(S3(), Permutation(3)).order() == 1);
  CHECK_THROWS_AS(normal_closure(L3(), cyc(3, "(1 2)")), InputError);
}

TEST_CASE("core") {
  auto l0 = L0();
  Point pts[] = {2, 0};
  CHECK(core(l0, pointwise_stabiliser(l0, pts)).order() == 1);
  CHECK(core(S3(), PermutationGroup(3, {cyc(3, "(1 2)")})).order() == 1);
  CHECK(core(S3(), S3()).order() == 6);
  CHECK(core(S3(), PermutationGroup(3, {cyc(3, "(1 2 3)")})).order() == 3);
  CHECK_THROWS_AS(core(L3(), PermutationGroup(3, {cyc(3, "(1 2)")})), InputError);
}

TEST_CASE("semiprimitivity") {
  CHECK(is_semiprimitive(L2()));
  CHECK_FALSE(is_semiprimitive(L0()));
  CHECK(is_semiprimitive(S3()));
  auto s7 = parse_group_spec("degree 7\n(1 2 3 4 5 6 7)\n(1 2)\n");
  CHECK_THROWS_AS(is_semiprimitive(s7, 100), CapacityError);
}

TEST_CASE("permutation isomorphism") {
  auto w = permutation_isomorphic(L0(), L0());
  REQUIRE(w);
  CHECK(w->is_identity());

  auto a = PermutationGroup(3, {cyc(3, "(1 2)")});
  auto b = PermutationGroup(3, {cyc(3, "(1 3)")});
  auto w2 = permutation_isomorphic(a, b);
  REQUIRE(w2);
  CHECK(*w2 == cyc(3, "(2 3)"));
  CHECK(same_group(conjugate_group(a, *w2), b));

  CHECK_FALSE(permutation_isomorphic(L0(), L3()));
  CHECK_FALSE(permutation_isomorphic(L0(), L1()));
}

TEST_CASE("oracle equivalence on random subgroups") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t degree = 3 + static_cast<std::size_t>(trial % 5);
    auto g = oracle::random_subgroup(rng, degree, 5040);
    auto all = oracle::closure(degree, g.generators());
    CAPTURE(format_group_spec(g));
    REQUIRE(g.order() == all.size());

    // Membership agrees with the closure on elements and non-elements.
    std::vector<Point> images(degree);
    for (int probe = 0; probe < 20; ++probe) {
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      Permutation x(images);
      CHECK(g.contains(x) == all.contains(x));
    }

    // Orbits are blocks fixed by every generator.
    for (const auto& orbit : orbits(g)) {
      for (const auto& s : g.generators()) {
        std::vector<Point> image;
        for (Point p : orbit) image.push_back(s(p));
        std::sort(image.begin(), image.end());
        CHECK(image == orbit);
      }
    }

    auto pred = predicates(g);
    bool every_stab_trivial = true;
    for (Point p = 0; p < degree; ++p) {
      every_stab_trivial = every_stab_trivial && point_stabiliser(g, p).order() == 1;
    }
    CHECK(pred.is_semiregular == every_stab_trivial);
  }
}

TEST_CASE("core agrees with conjugate intersection") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t degree = 4 + static_cast<std::size_t>(trial % 3);
    auto g = oracle::random_subgroup(rng, degree, 720);
    auto all = oracle::closure(degree, g.generators());
    // Subgroup: a point stabiliser or the subgroup generated by one element.
    PermutationGroup h = trial % 2 == 0
                             ? point_stabiliser(g, static_cast<Point>(trial % degree))
                             : PermutationGroup(degree, {g.generators().front()});
    auto h_all = oracle::closure(degree, h.generators());
    auto expected = oracle::core_by_conjugates(all, h_all);
    auto got = core(g, h);
    CAPTURE(format_group_spec(g));
    CHECK(got.order() == expected.size());
    for (const auto& x : expected) CHECK(got.contains(x));
  }
}

TEST_CASE("permutation isomorphism agrees with exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t degree = 3 + static_cast<std::size_t>(trial % 4);
    auto g1 = oracle::random_subgroup(rng, degree, 720);
    // Half the time compare against a relabelled copy.
    PermutationGroup g2 = g1;
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    if (trial % 2 == 0) {
      g2 = conjugate_group(g1, Permutation(images));
    } else {
      g2 = oracle::random_subgroup(rng, degree, 720);
    }
    auto s1 = oracle::closure(degree, g1.generators());
    auto s2 = oracle::closure(degree, g2.generators());
    auto fast = permutation_isomorphic(g1, g2);
    auto slow = oracle::isomorphic_exhaustive(degree, s1, s2);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(same_group(conjugate_group(g1, *fast), g2));
      // The inverse relabelling is a witness the other way.
      CHECK(same_group(conjugate_group(g2, fast->inverse()), g1));
    }
  }
}

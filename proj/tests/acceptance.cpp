// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "grestrict/cli.hpp"
#include "grestrict/errors.hpp"
#include "grestrict/group_spec.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace grestrict;
using Json = nlohmann::json;

namespace {

// Pinned limits. Every numeric comparison below is exact.
constexpr double kSecondsPerL0 = 30.0;
constexpr double kSecondsPerL1 = 120.0;
constexpr double kSecondsOracles = 300.0;

const char* kL0 = "degree 3\n(1 2)\n";
const char* kL1 = "degree 5\n(1 2 3)(4 5)\n";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "grestrict_acceptance" / name;
  std::filesystem::remove_all(dir);
  return dir;
}

Json construct(const char* group, std::size_t n, std::uint64_t seed, double& elapsed,
               std::optional<std::filesystem::path> out = {}) {
  cli::ConstructOptions o;
  o.n = n;
  o.seed = seed;
  o.json = true;
  o.out_dir = out;
  auto t0 = std::chrono::steady_clock::now();
  auto r = cli::cmd_construct(group, o);
  elapsed = seconds_since(t0);
  if (r.exit_code != cli::kOk) throw Error("construct exited " + std::to_string(r.exit_code) + ": " + r.err);
  return Json::parse(r.out);
}

Outcome family(const char* group, std::vector<std::size_t> ns, std::vector<int> orders,
               int valency, double limit) {
  Outcome o;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double t = 0;
    auto cert = construct(group, ns[i], 0, t);
    std::string got = cert["graph"]["stabiliser_order"];
    int val = cert["graph"]["valency"];
    o.require(got == std::to_string(orders[i]),
              "n=" + std::to_string(ns[i]) + " |G_v| " + got);
    o.require(val == valency, "n=" + std::to_string(ns[i]) + " valency " + std::to_string(val));
    o.require(t < limit, "n=" + std::to_string(ns[i]) + " took " + std::to_string(t) + "s");
    std::ostringstream s;
    s << "n=" << ns[i] << ": |G_v|=" << got << " val=" << val << " "
      << cert["graph"]["mode"].get<std::string>() << " " << std::fixed;
    s.precision(3);
    s << t << "s";
    o.note(s.str());
  }
  return o;
}

Outcome criterion1() { return family(kL0, {2, 3, 4, 5}, {8, 16, 32, 64}, 3, kSecondsPerL0); }
Outcome criterion2() { return family(kL1, {2, 3}, {54, 162}, 5, kSecondsPerL1); }

Outcome criterion3() {
  Outcome o;
  auto rows = growth_report(fixtures::L0(), 2, 5);
  o.require(rows.size() == 4, "row count");
  std::string column;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    o.require(rows[i].accepted() && rows[i].stabiliser_order.has_value(),
              "row n=" + std::to_string(rows[i].n));
    if (!rows[i].stabiliser_order) continue;
    column += (i ? "," : "") + rows[i].stabiliser_order->str();
    if (i > 0 && rows[i - 1].stabiliser_order) {
      o.require(*rows[i].stabiliser_order == 2 * *rows[i - 1].stabiliser_order,
                "ratio at n=" + std::to_string(rows[i].n));
    }
  }
  o.note("stabiliser column " + column + ", ratio 2");
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Case {
    PermutationGroup L;
    std::size_t n;
  };
  std::vector<Case> cases{{fixtures::L0(), 2}, {fixtures::L0(), 3}, {fixtures::L0(), 4},
                          {fixtures::L0(), 5}, {fixtures::L1(), 2}, {fixtures::L1(), 3}};
  for (const auto& c : cases) {
    auto analysis = analyze_local_group(c.L);
    auto star = std::make_shared<const AmalgamStar>(analysis, c.n);
    auto search = find_completion(star);
    std::string tag = "L(" + std::to_string(c.L.degree()) + ") n=" + std::to_string(c.n);
    o.require(search.accepted(), tag + " accepted");
    if (!search.accepted()) continue;
    const auto& report = *search.report;
    for (std::size_t e = 0; e < report.edges.size(); ++e) {
      o.require(report.edges[e].v1 && report.edges[e].intersection_order == star->edge_order(e),
                tag + " V1 edge " + std::to_string(e + 1));
    }
    o.require(report.v3.value_or(false), tag + " core trivial");
    auto built = build_graph(*search.candidate);
    auto w = local_action(built, *search.candidate);
    BigInt expected = 1;
    for (std::size_t j = 0; j < c.n; ++j) expected *= analysis.stabiliser_orders.front();
    o.require(w.kernel_order == expected, tag + " kernel order " + w.kernel_order.str());
    PermutationGroup induced(c.L.degree(), built.local_generators);
    o.require(same_group(conjugate_group(induced, Permutation(w.labels)), c.L),
              tag + " labels realise L");
    o.require(same_group(conjugate_group(induced, w.isomorphism), c.L),
              tag + " isomorphism witness");
  }
  o.note(std::to_string(cases.size()) + " completions: V1 exact, core 1, kernels |L_w1|^n, witnesses verified");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto dir = scratch("loop");
  double t = 0;
  construct(kL0, 2, 0, t, dir);
  auto v = cli::cmd_verify((dir / "graph.edges").string(), slurp(dir / "graph.edges"),
                           slurp(dir / "group.txt"), kL0, true);
  o.require(v.exit_code == cli::kOk, "verify exit " + std::to_string(v.exit_code) + " " + v.err);
  if (v.exit_code != cli::kOk) return o;
  auto j = Json::parse(v.out);
  o.require(j["locally_L"] == true, "locally-L0");
  o.require(j["stabiliser_order"] == "8", "stabiliser order");
  o.note("exported graph re-verified: locally-L0, |G_v| = " + j["stabiliser_order"].get<std::string>());
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  auto c6 = FiniteGraph::from_edges(6, edges);
  auto rot = parse_permutation("(1 2 3 4 5 6)", 6);
  auto ref = parse_permutation("(2 6)(3 5)", 6);
  auto a = verify_locally_L(c6, {rot}, PermutationGroup::trivial(2));
  auto b = verify_locally_L(c6, {rot, ref}, fixtures::group("degree 2\n(1 2)\n"));
  o.require(a.locally_L && a.stabiliser_order == 1, "rotation group");
  o.require(b.locally_L && b.stabiliser_order == 2, "dihedral group");
  o.require(a.semiregular_bound.value_or(false) && b.semiregular_bound.value_or(false),
            "bound <= valency 2");
  o.note("|G_v| = " + a.stabiliser_order.str() + " and " + b.stabiliser_order.str() + ", valency 2");
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240611);
  int groups = 0, iso_cases = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t degree = 3 + static_cast<std::size_t>(trial % 5);
    auto g = oracle::random_subgroup(rng, degree, 5040);
    auto all = oracle::closure(degree, g.generators());
    o.require(g.order() == all.size(), "order of " + format_group_spec(g));
    std::vector<Point> images(degree);
    for (int probe = 0; probe < 50; ++probe) {
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      Permutation x(images);
      o.require(g.contains(x) == all.contains(x), "membership");
    }
    // (b) core of a point stabiliser and of a cyclic subgroup.
    for (const auto& h : {point_stabiliser(g, 0), PermutationGroup(degree, {g.generators().front()})}) {
      auto expected = oracle::core_by_conjugates(all, oracle::closure(degree, h.generators()));
      auto got = core(g, h);
      bool same = got.order() == expected.size();
      for (const auto& x : expected) same = same && got.contains(x);
      o.require(same, "core in " + format_group_spec(g));
    }
    // (c) isomorphism against exhaustive search, degree <= 6.
    if (degree <= 6) {
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      PermutationGroup other = trial % 2 == 0 ? conjugate_group(g, Permutation(images))
                                              : oracle::random_subgroup(rng, degree, 720);
      auto fast = permutation_isomorphic(g, other);
      auto slow = oracle::isomorphic_exhaustive(degree, all,
                                                oracle::closure(degree, other.generators()));
      o.require(fast.has_value() == slow.has_value(), "isomorphism decision");
      if (fast) o.require(same_group(conjugate_group(g, *fast), other), "isomorphism witness");
      ++iso_cases;
    }
    ++groups;
  }
  // (d) core of the intersection of the edge groups.
  for (auto [L, n, size] : {std::tuple{fixtures::L0(), 2, 4}, std::tuple{fixtures::L1(), 2, 9}}) {
    auto v = validate_star(AmalgamStar(analyze_local_group(L), n));
    o.require(v.core_order == static_cast<std::size_t>(size) && v.core_is_tail_subgroup,
              "star core " + std::to_string(v.core_order));
  }
  double t = seconds_since(t0);
  o.require(t < kSecondsOracles, "runtime " + std::to_string(t) + "s");
  std::ostringstream s;
  s << groups << " random groups, " << iso_cases << " isomorphism cases, star cores 4 and 9, "
    << std::fixed;
  s.precision(2);
  s << t << "s";
  o.note(s.str());
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Row {
    const char* name;
    PermutationGroup L;
    Verdict expected;
  };
  std::vector<Row> rows{{"L0", fixtures::L0(), Verdict::kNotRestrictive},
                        {"L1", fixtures::L1(), Verdict::kNotRestrictive},
                        {"L2", fixtures::L2(), Verdict::kRestrictiveSemiregular},
                        {"L3", fixtures::L3(), Verdict::kOutOfScopeTransitive},
                        {"1_3", PermutationGroup::trivial(3), Verdict::kRestrictiveSemiregular}};
  std::string table;
  for (const auto& r : rows) {
    auto a = analyze_local_group(r.L);
    o.require(a.verdict == r.expected, std::string(r.name) + " verdict " + to_string(a.verdict));
    if (!a.transitive) {
      o.require(a.semiprimitive.has_value() && *a.semiprimitive == a.semiregular,
                std::string(r.name) + " semiprimitive flag");
    }
    table += (table.empty() ? "" : ", ") + std::string(r.name) + "=" + to_string(a.verdict);
  }
  o.note(table);
  return o;
}

Outcome criterion9() {
  Outcome o;
  double t = 0;
  auto a = scratch("det_a");
  auto b = scratch("det_b");
  construct(kL0, 3, 7, t, a);
  construct(kL0, 3, 7, t, b);
  for (const char* f : {"certificate.json", "graph.edges", "graph.g6", "group.txt"}) {
    o.require(slurp(a / f) == slurp(b / f), std::string(f) + " differs");
  }
  auto c = scratch("det_c");
  auto d = scratch("det_d");
  construct(kL1, 2, 7, t, c);
  construct(kL1, 2, 7, t, d);
  o.require(slurp(c / "certificate.json") == slurp(d / "certificate.json"), "L1 certificate differs");
  o.note("L0 n=3 and L1 n=2, seed 7: byte-identical");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"construction exactness, L0 n=2..5", criterion1},
      {"second family, L1 n=2..3", criterion2},
      {"unboundedness witness", criterion3},
      {"construction invariants", criterion4},
      {"independent loop closure", criterion5},
      {"semiregular bound on the 6-cycle", criterion6},
      {"oracle equivalence suites", criterion7},
      {"classification table", criterion8},
      {"determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " [PRIMARY] "
              << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

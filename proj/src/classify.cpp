#include "grestrict/classify.hpp"

#include <algorithm>

#include "grestrict/errors.hpp"

namespace grestrict {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kRestrictiveSemiregular:
      return "RESTRICTIVE_SEMIREGULAR";
    case Verdict::kNotRestrictive:
      return "NOT_RESTRICTIVE";
    case Verdict::kOutOfScopeTransitive:
      return "OUT_OF_SCOPE_TRANSITIVE";
  }
  return "?";
}

LocalGroupAnalysis analyze_local_group(const PermutationGroup& L,
                                       std::uint64_t semiprimitive_cap) {
  LocalGroupAnalysis a{.source = L, .order = L.order()};
  auto parts = orbits(L);
  GroupPredicates pred = predicates(L);
  a.transitive = pred.is_transitive;
  a.semiregular = pred.is_semiregular;

  std::size_t first = 0;
  if (!a.transitive && !a.semiregular) {
    // Point with the largest stabiliser, smallest point on ties.
    BigInt best = 0;
    Point best_point = 0;
    for (Point p = 0; p < L.degree(); ++p) {
      BigInt o = point_stabiliser(L, p).order();
      if (o > best) {
        best = o;
        best_point = p;
      }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (std::binary_search(parts[i].begin(), parts[i].end(), best_point)) first = i;
    }
    a.orbits.push_back(parts[first]);
    a.orbit_reps.push_back(best_point);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!a.orbit_reps.empty() && i == first) continue;
    a.orbits.push_back(parts[i]);
    a.orbit_reps.push_back(parts[i].front());
  }
  for (Point w : a.orbit_reps) {
    a.stabilisers.push_back(point_stabiliser(L, w));
    a.stabiliser_orders.push_back(a.stabilisers.back().order());
  }

  if (a.order <= semiprimitive_cap) {
    a.semiprimitive = is_semiprimitive(L, semiprimitive_cap);
  }

  if (a.transitive) {
    a.verdict = Verdict::kOutOfScopeTransitive;
  } else if (a.semiregular) {
    a.verdict = Verdict::kRestrictiveSemiregular;
  } else {
    a.verdict = Verdict::kNotRestrictive;
    if (a.k() < 2 || a.stabiliser_orders.front() <= 1) {
      throw TheoryViolation("intransitive non-semiregular group without k >= 2 "
                            "and a nontrivial first stabiliser");
    }
  }
  return a;
}

VerdictReport restrictive_verdict(const LocalGroupAnalysis& analysis) {
  VerdictReport r{.verdict = analysis.verdict};
  std::size_t d = analysis.source.degree();
  switch (analysis.verdict) {
    case Verdict::kRestrictiveSemiregular:
      r.bound = d;
      r.summary = "graph-restrictive (semiregular, c(L) = " + std::to_string(d) + ")";
      r.justification = "semiregular local action forces trivial arc "
                        "stabilisers, hence |G_v| <= valency = " +
                        std::to_string(d);
      break;
    case Verdict::kNotRestrictive: {
      r.witness_base = analysis.order;
      r.witness_ratio = analysis.stabiliser_orders.front();
      std::string formula = analysis.order.str() + "·" +
                            analysis.stabiliser_orders.front().str() + "^n";
      r.summary = "not graph-restrictive; |G_v| = " + formula + " realizable";
      r.justification = "|L_w1| = " + analysis.stabiliser_orders.front().str() +
                        " > 1 at w1 = " +
                        std::to_string(analysis.orbit_reps.front() + 1) +
                        "; locally-L pairs with |G_v| = " + formula +
                        " exist for every n >= 2";
      break;
    }
    case Verdict::kOutOfScopeTransitive:
      r.summary = "transitive: outside this tool's scope";
      r.justification = "transitive local groups are not classified";
      break;
  }
  return r;
}

}  // namespace grestrict

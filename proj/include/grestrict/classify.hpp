#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grestrict/perm_group.hpp"

namespace grestrict {

enum class Verdict {
  kRestrictiveSemiregular,
  kNotRestrictive,
  kOutOfScopeTransitive,
};

/// "RESTRICTIVE_SEMIREGULAR", "NOT_RESTRICTIVE", "OUT_OF_SCOPE_TRANSITIVE".
std::string to_string(Verdict v);

/// Orbit structure of a local group L and the chosen representatives.
///
/// For intransitive non-semiregular L, rep 0 is the point whose stabiliser
/// has maximal order (smallest such point); the remaining orbits follow by
/// smallest element, each represented by that element. Otherwise every orbit
/// is represented by its smallest element, in orbit order.
struct LocalGroupAnalysis {
  PermutationGroup source;
  BigInt order;
  /// orbits[i] is the orbit of orbit_reps[i], sorted.
  std::vector<std::vector<Point>> orbits;
  std::vector<Point> orbit_reps;
  std::vector<PermutationGroup> stabilisers;
  std::vector<BigInt> stabiliser_orders;
  bool transitive = false;
  bool semiregular = false;
  /// Absent when |L| exceeds the enumeration cap.
  std::optional<bool> semiprimitive;
  Verdict verdict = Verdict::kOutOfScopeTransitive;

  std::size_t k() const { return orbit_reps.size(); }
};

LocalGroupAnalysis analyze_local_group(
    const PermutationGroup& L,
    std::uint64_t semiprimitive_cap = kDefaultEnumerationCap);

struct VerdictReport {
  Verdict verdict;
  /// c(L) = degree, present for semiregular L.
  std::optional<std::size_t> bound;
  /// |L| and |L_{w1}| of the unbounded witness family |G_v| = |L||L_{w1}|^n.
  std::optional<BigInt> witness_base;
  std::optional<BigInt> witness_ratio;
  /// "graph-restrictive (semiregular, c(L) = 4)" and the like.
  std::string summary;
  std::string justification;
};

VerdictReport restrictive_verdict(const LocalGroupAnalysis& analysis);

}  // namespace grestrict

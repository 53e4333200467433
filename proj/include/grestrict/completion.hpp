#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grestrict/amalgam.hpp"
#include "grestrict/perm_group.hpp"

namespace grestrict {

/// t disjoint copies of A under right multiplication. Point (a, j) has index
/// j*|A| + a, where a is the element index in the star.
class Carrier {
 public:
  using Index = AmalgamStar::Index;

  /// Throws CapacityError when t*|A| exceeds `cap`, InputError when t == 0.
  Carrier(std::shared_ptr<const AmalgamStar> star, std::size_t t,
          std::uint64_t cap = kDefaultCarrierCap);

  const AmalgamStar& star() const noexcept { return *star_; }
  std::shared_ptr<const AmalgamStar> star_ptr() const noexcept { return star_; }
  std::size_t copies() const noexcept { return t_; }
  std::size_t degree() const noexcept { return t_ * star_->order(); }
  Point point(Index a, std::size_t copy) const {
    return static_cast<Point>(copy * star_->order() + a);
  }

  /// x*y in A; uses a cached table for small A.
  Index multiply(Index x, Index y) const;

  Permutation rho(Index a) const;
  /// rho of star().generators(), in that order.
  const std::vector<Permutation>& rho_generators() const noexcept {
    return rho_generators_;
  }
  PermutationGroup rho_group() const;

  /// The a with x == rho(a), if any.
  std::optional<Index> rho_preimage(const Permutation& x) const;

 private:
  std::shared_ptr<const AmalgamStar> star_;
  std::size_t t_;
  std::vector<Index> table_;  // empty when A is large
  std::vector<Permutation> rho_generators_;
};

/// Left cosets a C_edge in A, each given by its smallest element, in
/// increasing order. These index the rho(C_edge)-orbits of one copy.
std::vector<AmalgamStar::Index> left_coset_representatives(
    const AmalgamStar& star, std::size_t edge);

/// How the involution on each edge is assembled. Orbit o of rho(C_edge) on
/// the carrier is (copy o / K, coset o % K), K = |A : C_edge|.
struct CompletionStrategy {
  std::size_t t = 1;
  /// pairing[edge][o]: an involution on orbit indices.
  std::vector<std::vector<std::uint32_t>> pairing;
  /// offsets[edge][o]: element of C_edge; the orbit representative is the
  /// coset representative times this offset.
  std::vector<std::vector<AmalgamStar::Index>> offsets;
  std::uint64_t seed = 0;
  std::string label;
};

/// Strategy with identity pairing on twisted edges, a fixed-point-free
/// pairing elsewhere, and trivial offsets. `t` defaults to the minimal value.
CompletionStrategy default_strategy(const AmalgamStar& star,
                                    std::optional<std::size_t> t = {});

/// Throws InputError when `strategy` is malformed for the carrier.
Permutation build_involution(const Carrier& carrier, std::size_t edge,
                             const CompletionStrategy& strategy);

struct CompletionCandidate {
  std::shared_ptr<const Carrier> carrier;
  std::vector<Permutation> beta;
  CompletionStrategy strategy;

  /// Set by make_candidate; copies share its stabiliser chain.
  std::optional<PermutationGroup> generated;

  /// rho(A generators) followed by beta_1..beta_k.
  std::vector<Permutation> group_generators() const;
  const PermutationGroup& group() const { return *generated; }
};

CompletionCandidate make_candidate(std::shared_ptr<const Carrier> carrier,
                                   CompletionStrategy strategy);

struct CompletionReport {
  struct Edge {
    bool v1 = false;
    bool v2 = false;
    /// |{a : beta rho(a) beta in rho(A)}|
    std::size_t intersection_order = 0;
  };
  std::vector<Edge> edges;
  bool v4 = false;
  /// Absent when the cheaper checks already failed and `full` was off.
  std::optional<bool> v3;
  std::optional<BigInt> group_order;
  std::size_t a_order = 0;

  bool accepted() const;
  /// "V1 on edge 2", ... or "" when accepted.
  std::string first_failure() const;
};

/// With `full` off, V3 and order(G) are skipped once V1, V2 or V4 fails.
/// Throws TheoryViolation if V1 holds on every edge but V3 fails.
CompletionReport verify_completion(const CompletionCandidate& candidate,
                                   bool full = true);

struct CompletionConfig {
  std::uint64_t seed = 0;
  std::size_t max_attempts = 400;
  std::size_t max_copies = 4;
  std::size_t random_attempts_per_t = 96;
  std::uint64_t carrier_cap = kDefaultCarrierCap;
};

struct CompletionAttempt {
  std::string label;
  std::size_t t = 0;
  std::string failure;  // empty when accepted
};

struct CompletionSearch {
  std::optional<CompletionCandidate> candidate;
  std::optional<CompletionReport> report;
  std::vector<CompletionAttempt> attempts;

  bool accepted() const { return candidate.has_value(); }
};

/// Fixed enumeration per t: the default strategy, the uniform alternative
/// pairings, then seeded random offsets (copy-preserving pairings first,
/// random pairings in the second half); then t+1. Stops at the first
/// accepted candidate or when a cap is reached.
CompletionSearch find_completion(std::shared_ptr<const AmalgamStar> star,
                                 const CompletionConfig& config = {});

}  // namespace grestrict

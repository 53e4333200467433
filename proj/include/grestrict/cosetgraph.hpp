#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grestrict/completion.hpp"
#include "grestrict/perm_group.hpp"

namespace grestrict {

inline constexpr std::uint64_t kDefaultVertexCap = 1000000;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
struct FiniteGraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;

  /// Throws InputError on loops, repeated edges or out-of-range ids.
  static FiniteGraph from_edges(std::size_t vertex_count,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t edge_count() const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  bool is_connected() const;
  /// Common degree, or nullopt when the graph is not regular.
  std::optional<std::size_t> valency() const;
  bool operator==(const FiniteGraph&) const = default;
};

/// Right cosets of rho(A) in G, each keyed by the base images of its
/// canonical element: the one whose image of point 0 is smallest.
class CosetEnumeration {
 public:
  explicit CosetEnumeration(const CompletionCandidate& candidate);

  const CompletionCandidate& candidate() const noexcept { return *candidate_; }
  std::vector<Point> key(const Permutation& x) const;
  Permutation canonical(const Permutation& x) const;
  /// Canonical element of the coset with this key.
  Permutation element(const std::vector<Point>& key) const;

  /// Breadth-first enumeration from rho(A) under the group generators.
  /// Returns false (and leaves the table empty) when more than `cap` cosets
  /// exist; the index |G : rho(A)| is checked first.
  bool enumerate(std::uint64_t cap);

  bool complete() const noexcept { return complete_; }
  std::size_t size() const noexcept { return ids_.size(); }
  /// Coset id of x, when enumerated.
  std::optional<std::uint32_t> find(const Permutation& x) const;
  const std::vector<Point>& key_of(std::uint32_t id) const { return keys_[id]; }
  /// transitions[g][v]: coset v times generator g.
  const std::vector<std::vector<std::uint32_t>>& transitions() const noexcept {
    return transitions_;
  }

 private:
  const CompletionCandidate* candidate_;
  std::vector<Point> base_;
  std::vector<std::vector<Point>> keys_;
  struct KeyHash {
    std::size_t operator()(const std::vector<Point>& k) const noexcept;
  };
  std::unordered_map<std::vector<Point>, std::uint32_t, KeyHash> ids_;
  std::vector<std::vector<std::uint32_t>> transitions_;
  bool complete_ = false;
};

/// One neighbour of the base vertex: the coset rho(A) beta_edge rho(rep).
struct BaseNeighbour {
  std::size_t edge = 0;
  AmalgamStar::Index rep = 0;
  /// Vertex id in explicit mode.
  std::optional<std::uint32_t> vertex;
};

struct ConstructedGraph {
  bool explicit_graph = false;
  BigInt group_order;
  /// |G : rho(A)|, exact in both modes.
  BigInt vertex_count;
  BigInt stabiliser_order;
  std::size_t valency = 0;
  std::vector<BaseNeighbour> base_neighbours;
  /// Action of each generator of rho(A) on base-neighbour positions,
  /// certified by membership tests on the carrier.
  std::vector<Permutation> local_generators;
  std::size_t key_checks = 0;

  /// Explicit mode only.
  std::optional<FiniteGraph> graph;
  std::vector<Permutation> vertex_generators;
};

/// Throws TheoryViolation on a valency defect, an asymmetric adjacency, or a
/// failed coset-key cross-check.
ConstructedGraph build_graph(const CompletionCandidate& candidate,
                             std::uint64_t vertex_cap = kDefaultVertexCap,
                             std::uint64_t check_seed = 0);

struct LocalActionWitness {
  /// labels[q] is the point of L attached to base neighbour q.
  std::vector<Point> labels;
  /// Relabelling from neighbour positions to points of L found by the
  /// isomorphism search (need not equal `labels`).
  Permutation isomorphism{1};
  BigInt induced_order;
  BigInt kernel_order;
};

/// Throws TheoryViolation when the labelled neighbourhood action is not L or
/// the kernel is not 1 x L_w1^n.
LocalActionWitness local_action(const ConstructedGraph& constructed,
                                const CompletionCandidate& candidate);

struct LocallyLCertificate {
  bool connected = false;
  bool vertex_transitive = false;
  BigInt group_order;
  BigInt stabiliser_order;
  std::optional<std::size_t> valency;
  /// Group induced by the stabiliser of vertex 0 on its neighbours (sorted).
  std::vector<Permutation> induced_generators;
  BigInt induced_order;
  std::optional<Permutation> witness;
  /// Set when L is semiregular: stabiliser order <= valency.
  std::optional<bool> semiregular_bound;
  bool locally_L = false;
  std::string reason;
};

/// Throws InputError naming the generator and edge when a generator is not
/// an automorphism.
LocallyLCertificate verify_locally_L(const FiniteGraph& graph,
                                     const std::vector<Permutation>& generators,
                                     const PermutationGroup& L);

struct GrowthRow {
  std::size_t n = 0;
  BigInt a_order;
  std::optional<BigInt> group_order;
  std::optional<BigInt> vertex_count;
  bool explicit_graph = false;
  std::optional<CompletionReport> report;
  std::optional<BigInt> stabiliser_order;
  bool locally_L = false;
  std::string failure;  // empty when the row is accepted
  std::size_t attempts = 0;

  bool accepted() const { return failure.empty(); }
};

struct GrowthConfig {
  CompletionConfig completion;
  std::uint64_t vertex_cap = kDefaultVertexCap;
};

/// One row per n in [n_from, n_to]; empty when n_from > n_to.
std::vector<GrowthRow> growth_report(const PermutationGroup& L, std::size_t n_from,
                                     std::size_t n_to, const GrowthConfig& config = {});

enum class GraphFormat { kEdgeList, kAdjacencyList, kGraph6 };

std::string export_graph(const FiniteGraph& graph, GraphFormat format);
/// Throws ParseError with a line number on malformed input.
FiniteGraph parse_graph(std::string_view text, GraphFormat format);
/// graph6 for a .g6 path; adjacency list when the text has a colon; else
/// edge list.
GraphFormat guess_graph_format(std::string_view path, std::string_view text);

}  // namespace grestrict

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grestrict/classify.hpp"
#include "grestrict/perm_group.hpp"

namespace grestrict {

inline constexpr std::uint64_t kDefaultCarrierCap = 10000;

/// Element (head; tail_1..tail_n) of A = L x L_w1^n.
struct AElement {
  Permutation head;
  std::vector<Permutation> tail;

  bool operator==(const AElement&) const = default;
};

/// Element (base, epsilon) of B_i = C_i extended by the involution b_i.
struct BElement {
  std::size_t edge = 0;
  AElement base;
  bool epsilon = false;

  bool operator==(const BElement&) const = default;
};

/// The vertex group A, the edge groups C_i and the edge involutions of the
/// star of groups around A, for a fixed n >= 2.
///
/// Edges are 0-based: edge 0 belongs to w1 and its twist reverses all n+1
/// coordinates; edge 1 reverses the tail only; later edges have trivial
/// twist. Elements of A are addressed by their position in the enumeration
/// ordered by head, then tail, with L and L_w1 each sorted by image list.
/// Index 0 is the identity.
class AmalgamStar {
 public:
  using Index = std::uint32_t;

  /// Throws InputError unless the verdict is NOT_RESTRICTIVE and n >= 2, and
  /// CapacityError when |A| exceeds `cap`.
  AmalgamStar(const LocalGroupAnalysis& analysis, std::size_t n,
              std::uint64_t cap = kDefaultCarrierCap);

  const LocalGroupAnalysis& analysis() const noexcept { return analysis_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return analysis_.k(); }
  std::size_t order() const noexcept { return order_; }
  std::size_t edge_order(std::size_t edge) const;
  std::size_t edge_index(std::size_t edge) const {
    return order_ / edge_order(edge);
  }
  const std::vector<Permutation>& local_elements() const noexcept {
    return l_elements_;
  }
  const std::vector<Permutation>& stabiliser_elements() const noexcept {
    return w_elements_;
  }

  AElement element(Index x) const;
  /// Throws InputError when `a` is not an element of A.
  Index index_of(const AElement& a) const;

  Index multiply(Index x, Index y) const;
  Index inverse(Index x) const;
  bool in_edge_group(std::size_t edge, Index x) const;
  /// Throws InputError when `c` is outside C_edge.
  Index phi(std::size_t edge, Index c) const;
  /// Position of the head of `x` in local_elements().
  std::uint32_t head_index(Index x) const { return x / tail_count_; }
  const Permutation& head(Index x) const { return l_elements_[head_index(x)]; }

  std::vector<Index> generators() const;
  std::vector<Index> edge_generators(std::size_t edge) const;
  /// C_edge as a sorted index list.
  std::vector<Index> edge_elements(std::size_t edge) const;

  AElement multiply(const AElement& u, const AElement& v) const;
  AElement phi(std::size_t edge, const AElement& c) const;
  /// (c, e)(c', e') = (c phi^e(c'), e xor e'). Throws InputError unless both
  /// bases lie in C_edge of the same edge.
  BElement multiply(const BElement& u, const BElement& v) const;

 private:
  std::vector<std::uint32_t> digits(Index x) const;
  Index encode(const std::vector<std::uint32_t>& digits) const;
  std::uint32_t mul_l(std::uint32_t a, std::uint32_t b) const {
    return l_table_[static_cast<std::size_t>(a) * l_elements_.size() + b];
  }

  LocalGroupAnalysis analysis_;
  std::size_t n_;
  std::size_t order_;
  std::size_t tail_count_;  // |L_w1|^n
  std::vector<Permutation> l_elements_;
  std::vector<Permutation> w_elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> l_index_;
  std::vector<std::uint32_t> l_table_;
  std::vector<std::uint32_t> l_inverse_;
  std::vector<std::int32_t> l_to_w_;  // -1 outside L_w1
  std::vector<std::uint32_t> w_to_l_;
  std::vector<std::vector<bool>> l_in_stabiliser_;  // [edge][L index]
};

struct StarValidation {
  bool phi_involutive = false;
  bool phi_multiplicative = false;
  bool indices_consistent = false;
  /// Core of C_1 n ... n C_k in A, by brute-force conjugation.
  std::size_t core_order = 0;
  bool core_is_tail_subgroup = false;
};

/// Throws ValidationError naming the first failed check.
StarValidation validate_star(const AmalgamStar& star);

/// Neighbourhood of the base vertex: one neighbour per right coset C_i a.
struct LocalModel {
  struct Neighbour {
    std::size_t edge;
    /// Smallest element of the coset C_edge a.
    AmalgamStar::Index rep;
    /// w_edge under the head of rep.
    Point label;
  };
  std::vector<Neighbour> neighbours;
  /// coset_of[edge][x] is the neighbour index of C_edge x.
  std::vector<std::vector<std::uint32_t>> coset_of;
  /// Action of each star generator on neighbour indices.
  std::vector<Permutation> generator_action;
  /// Elements of A fixing every neighbour.
  std::vector<AmalgamStar::Index> kernel;

  /// Neighbour reached from neighbour q under right multiplication by x.
  std::uint32_t act(const AmalgamStar& star, std::uint32_t q,
                    AmalgamStar::Index x) const;
};

/// Throws TheoryViolation when the labelling is not a bijection onto the
/// points of L, when the action does not factor through the head, or when
/// the kernel is not 1 x L_w1^n.
LocalModel local_model(const AmalgamStar& star);

}  // namespace grestrict

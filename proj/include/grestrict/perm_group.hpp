#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grestrict/permutation.hpp"

namespace grestrict {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on explicit element enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stabilises base[0..i-1] pointwise; its strong generators generate
/// that stabiliser and its transversal maps base[i] to every point of the
/// level's basic orbit. Base points beyond a caller-supplied prefix are the
/// first point moved by the element that forced the extension.
class StabiliserChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> strong_generators;
    std::vector<Point> orbit;
    /// orbit_index[p] is the position of p in `orbit`, or -1.
    std::vector<std::int32_t> orbit_index;
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;

    bool in_orbit(Point p) const { return orbit_index[p] >= 0; }
    const Permutation& representative(Point p) const {
      return transversal[static_cast<std::size_t>(orbit_index[p])];
    }
  };

  StabiliserChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;

  BigInt order() const;

  /// Strips `g` through the chain. Returns the residue and the level at which
  /// stripping stopped (depth() when it ran through every level).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  /// The unique group element with the given images of base(), or nullopt if
  /// no element has them.
  std::optional<Permutation> element_from_base_images(
      std::span<const Point> images) const;

  /// Strong generators of the pointwise stabiliser of the first `count` base
  /// points.
  std::vector<Permutation> stabiliser_generators(std::size_t count) const;

  /// Every group element, in no particular order.
  std::vector<Permutation> all_elements() const;

 private:
  void extend_orbit(Level& level);
  void add_base_point(Point p);
  void run_schreier_sims();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Group generated by permutations of a common degree. Immutable; the
/// stabiliser chain is built on first use and shared between copies.
class PermutationGroup {
 public:
  /// Throws InputError when a generator has the wrong degree or degree is 0.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermutationGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }

  const StabiliserChain& chain() const;
  BigInt order() const { return chain().order(); }
  /// Order as an integer, throwing CapacityError above `cap`.
  std::uint64_t small_order(std::uint64_t cap = kDefaultEnumerationCap) const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }

  /// All elements sorted lexicographically by image list (the identity comes
  /// first). Throws CapacityError when the order exceeds `cap`.
  std::vector<Permutation> elements(
      std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabiliserChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

struct GroupPredicates {
  bool is_transitive = false;
  bool is_semiregular = false;
};

/// Orbits sorted internally, ordered by minimal element.
std::vector<std::vector<Point>> orbits(const PermutationGroup& group);

/// Orbit of one point, in breadth-first discovery order.
std::vector<Point> orbit_of(const PermutationGroup& group, Point p);

/// Stabiliser chain with an explicit base prefix (not cached).
StabiliserChain build_chain(const PermutationGroup& group,
                            std::span<const Point> base_prefix = {});

PermutationGroup point_stabiliser(const PermutationGroup& group, Point p);

/// Pointwise stabiliser of a sequence of points.
PermutationGroup pointwise_stabiliser(const PermutationGroup& group,
                                      std::span<const Point> points);

GroupPredicates predicates(const PermutationGroup& group);

/// Smallest normal subgroup of `group` containing `element`.
PermutationGroup normal_closure(const PermutationGroup& group,
                                const Permutation& element);

/// Largest normal subgroup of `group` contained in `subgroup`. Enumerates
/// `subgroup` (bounded by `cap`) and removes elements until the remainder is
/// closed under conjugation by the generators of `group`.
PermutationGroup core(const PermutationGroup& group,
                      const PermutationGroup& subgroup,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// Every normal subgroup is transitive or semiregular. Decided through normal
/// closures of non-identity elements with a fixed point.
bool is_semiprimitive(const PermutationGroup& group,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// A point bijection `sigma` with {sigma^-1 x sigma : x in g1} == g2, or
/// nullopt. `sigma(p)` is the relabelling of point p.
std::optional<Permutation> permutation_isomorphic(const PermutationGroup& g1,
                                                  const PermutationGroup& g2);

/// The group {sigma^-1 x sigma : x in group}.
PermutationGroup conjugate_group(const PermutationGroup& group,
                                 const Permutation& sigma);

/// True when the two groups are equal as sets of permutations.
bool same_group(const PermutationGroup& a, const PermutationGroup& b);

}  // namespace grestrict

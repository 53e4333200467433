#pragma once

// Brute-force reference implementations. These deliberately avoid the
// stabiliser chain so they can check it.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "grestrict/perm_group.hpp"

namespace grestrict::oracle {

/// Every element, by breadth-first closure over the generators.
std::set<Permutation> closure(std::size_t degree,
                              const std::vector<Permutation>& generators);

/// Intersection of all conjugates of `subgroup` by elements of `group`.
std::set<Permutation> core_by_conjugates(const std::set<Permutation>& group,
                                         const std::set<Permutation>& subgroup);

/// Tries all degree! bijections in lexicographic order.
std::optional<Permutation> isomorphic_exhaustive(
    std::size_t degree, const std::set<Permutation>& g1,
    const std::set<Permutation>& g2);

/// A random subgroup of Sym(degree) generated by one to three random
/// permutations, retried until its order is at most `max_order`.
PermutationGroup random_subgroup(std::mt19937_64& rng, std::size_t degree,
                                 std::uint64_t max_order);

}  // namespace grestrict::oracle

namespace grestrict::fixtures {

PermutationGroup group(const char* spec);
/// <(1 2)> on {1,2,3}.
PermutationGroup L0();
/// <(1 2 3)(4 5)> on {1..5}.
PermutationGroup L1();
/// <(1 2)(3 4)> on {1..4}.
PermutationGroup L2();
/// <(1 2 3)> on {1,2,3}.
PermutationGroup L3();
PermutationGroup S3();

}  // namespace grestrict::fixtures

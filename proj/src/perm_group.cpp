#include "grestrict/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "grestrict/errors.hpp"

namespace grestrict {

// ---------------------------------------------------------------------------
// StabiliserChain

StabiliserChain::StabiliserChain(std::size_t degree,
                                 std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point p : base_prefix) {
    if (p >= degree) throw InputError("base point out of range");
    bool seen = std::any_of(levels_.begin(), levels_.end(),
                            [p](const Level& l) { return l.base_point == p; });
    if (!seen) add_base_point(p);
  }

  std::vector<Permutation> nontrivial;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  for (const auto& g : nontrivial) {
    bool fixes_base = std::all_of(
        levels_.begin(), levels_.end(),
        [&g](const Level& l) { return g.fixes(l.base_point); });
    if (fixes_base) add_base_point(g.first_moved_point());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : nontrivial) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) {
        fixes_prefix = g.fixes(levels_[j].base_point);
      }
      if (fixes_prefix) levels_[i].strong_generators.push_back(g);
    }
    extend_orbit(levels_[i]);
  }
  run_schreier_sims();
}

void StabiliserChain::add_base_point(Point p) {
  Level level;
  level.base_point = p;
  level.orbit = {p};
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[p] = 0;
  level.transversal.emplace_back(degree_);
  level.transversal_inverse.emplace_back(degree_);
  levels_.push_back(std::move(level));
}

void StabiliserChain::extend_orbit(Level& level) {
  // Keeps existing transversal entries; only new points get representatives.
  for (std::size_t q = 0; q < level.orbit.size(); ++q) {
    for (const auto& g : level.strong_generators) {
      Point image = g(level.orbit[q]);
      if (level.orbit_index[image] >= 0) continue;
      level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation rep = level.transversal[q] * g;
      level.transversal_inverse.push_back(rep.inverse());
      level.transversal.push_back(std::move(rep));
    }
  }
}

void StabiliserChain::run_schreier_sims() {
  std::vector<std::unordered_set<std::uint64_t>> checked(levels_.size());
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto level_index = static_cast<std::size_t>(i);
    for (std::size_t oi = 0;
         oi < levels_[level_index].orbit.size() && !restarted; ++oi) {
      for (std::size_t gi = 0;
           gi < levels_[level_index].strong_generators.size(); ++gi) {
        std::uint64_t key = (static_cast<std::uint64_t>(oi) << 32) | gi;
        if (!checked[level_index].insert(key).second) continue;

        const Level& level = levels_[level_index];
        const Permutation& g = level.strong_generators[gi];
        Point image = g(level.orbit[oi]);
        Permutation schreier = level.transversal[oi] * g *
                               level.transversal_inverse[static_cast<std::size_t>(
                                   level.orbit_index[image])];
        auto [residue, stop] = sift(std::move(schreier), level_index + 1);
        if (residue.is_identity()) continue;

        if (stop == levels_.size()) {
          add_base_point(residue.first_moved_point());
          checked.emplace_back();
        }
        for (std::size_t l = level_index + 1; l <= stop; ++l) {
          levels_[l].strong_generators.push_back(residue);
          extend_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<Point> StabiliserChain::base() const {
  std::vector<Point> result;
  result.reserve(levels_.size());
  for (const auto& l : levels_) result.push_back(l.base_point);
  return result;
}

BigInt StabiliserChain::order() const {
  BigInt result = 1;
  for (const auto& l : levels_) result *= l.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabiliserChain::sift(
    Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point image = g(level.base_point);
    if (level.orbit_index[image] < 0) return {std::move(g), l};
    g = g * level.transversal_inverse[static_cast<std::size_t>(
                level.orbit_index[image])];
  }
  return {std::move(g), levels_.size()};
}

bool StabiliserChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

std::optional<Permutation> StabiliserChain::element_from_base_images(
    std::span<const Point> images) const {
  if (images.size() != levels_.size()) return std::nullopt;
  std::vector<Point> targets(images.begin(), images.end());
  Permutation acc(degree_);
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    if (targets[l] >= degree_ || level.orbit_index[targets[l]] < 0) {
      return std::nullopt;
    }
    auto idx = static_cast<std::size_t>(level.orbit_index[targets[l]]);
    const Permutation& inv = level.transversal_inverse[idx];
    for (std::size_t m = l + 1; m < levels_.size(); ++m) {
      targets[m] = inv(targets[m]);
    }
    acc = level.transversal[idx] * acc;
  }
  return acc;
}

std::vector<Permutation> StabiliserChain::stabiliser_generators(
    std::size_t count) const {
  if (count >= levels_.size()) return {};
  return levels_[count].strong_generators;
}

std::vector<Permutation> StabiliserChain::all_elements() const {
  std::vector<Permutation> current{Permutation(degree_)};
  for (auto l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * levels_[l].transversal.size());
    for (const auto& x : current) {
      for (const auto& u : levels_[l].transversal) next.push_back(x * u);
    }
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      cache_(std::make_shared<ChainCache>()) {
  if (degree == 0) throw InputError("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) {
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
    }
  }
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {});
}

const StabiliserChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabiliserChain>(degree_, generators_);
  });
  return *cache_->chain;
}

std::uint64_t PermutationGroup::small_order(std::uint64_t cap) const {
  BigInt o = order();
  if (o > cap) throw CapacityError("group order " + o.str() + " exceeds cap", cap);
  return static_cast<std::uint64_t>(o);
}

bool PermutationGroup::contains(const Permutation& g) const {
  return chain().contains(g);
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  small_order(cap);
  auto result = chain().all_elements();
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Point> orbit_of(const PermutationGroup& group, Point p) {
  if (p >= group.degree()) throw InputError("point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> orbit{p};
  seen[p] = true;
  for (std::size_t q = 0; q < orbit.size(); ++q) {
    for (const auto& g : group.generators()) {
      Point image = g(orbit[q]);
      if (!seen[image]) {
        seen[image] = true;
        orbit.push_back(image);
      }
    }
  }
  return orbit;
}

std::vector<std::vector<Point>> orbits(const PermutationGroup& group) {
  std::vector<bool> seen(group.degree(), false);
  std::vector<std::vector<Point>> result;
  for (Point p = 0; p < group.degree(); ++p) {
    if (seen[p]) continue;
    auto orbit = orbit_of(group, p);
    for (Point q : orbit) seen[q] = true;
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

StabiliserChain build_chain(const PermutationGroup& group,
                            std::span<const Point> base_prefix) {
  return StabiliserChain(group.degree(), group.generators(), base_prefix);
}

PermutationGroup point_stabiliser(const PermutationGroup& group, Point p) {
  if (p >= group.degree()) {
    throw InputError("point " + std::to_string(p + 1) + " outside 1.." +
                     std::to_string(group.degree()));
  }
  Point prefix[] = {p};
  auto chain = build_chain(group, prefix);
  return PermutationGroup(group.degree(), chain.stabiliser_generators(1));
}

PermutationGroup pointwise_stabiliser(const PermutationGroup& group,
                                      std::span<const Point> points) {
  std::vector<Point> distinct;
  for (Point p : points) {
    if (p >= group.degree()) throw InputError("point out of range");
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(p);
    }
  }
  auto chain = build_chain(group, distinct);
  return PermutationGroup(group.degree(),
                          chain.stabiliser_generators(distinct.size()));
}

GroupPredicates predicates(const PermutationGroup& group) {
  GroupPredicates result;
  result.is_transitive = orbits(group).size() == 1;
  result.is_semiregular = true;
  for (Point p = 0; p < group.degree() && result.is_semiregular; ++p) {
    result.is_semiregular = point_stabiliser(group, p).order() == 1;
  }
  return result;
}

PermutationGroup normal_closure(const PermutationGroup& group,
                                const Permutation& element) {
  if (element.degree() != group.degree() || !group.contains(element)) {
    throw InputError("normal closure: element is not in the group");
  }
  std::vector<Permutation> gens;
  if (element.is_identity()) return PermutationGroup::trivial(group.degree());
  gens.push_back(element);
  auto chain = std::make_unique<StabiliserChain>(group.degree(), gens);
  for (std::size_t q = 0; q < gens.size(); ++q) {
    for (const auto& s : group.generators()) {
      Permutation c = gens[q].conjugate_by(s);
      if (chain->contains(c)) continue;
      gens.push_back(std::move(c));
      chain = std::make_unique<StabiliserChain>(group.degree(), gens);
    }
  }
  return PermutationGroup(group.degree(), std::move(gens));
}

namespace {

// Generators for the subgroup formed by `elements`, chosen greedily.
PermutationGroup group_from_elements(std::size_t degree,
                                     const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::unique_ptr<StabiliserChain> chain =
      std::make_unique<StabiliserChain>(degree, gens);
  for (const auto& e : elements) {
    if (chain->contains(e)) continue;
    gens.push_back(e);
    chain = std::make_unique<StabiliserChain>(degree, gens);
  }
  return PermutationGroup(degree, std::move(gens));
}

}  // namespace

PermutationGroup core(const PermutationGroup& group,
                      const PermutationGroup& subgroup, std::uint64_t cap) {
  if (group.degree() != subgroup.degree()) {
    throw InputError("core: degree mismatch");
  }
  for (const auto& h : subgroup.generators()) {
    if (!group.contains(h)) {
      throw InputError("core: subgroup is not contained in the group");
    }
  }
  auto elements = subgroup.elements(cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<bool> alive(elements.size(), true);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& s : group.generators()) {
        auto it = index.find(elements[i].conjugate_by(s));
        if (it == index.end() || !alive[it->second]) {
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Permutation> survivors;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (alive[i]) survivors.push_back(elements[i]);
  }
  return group_from_elements(group.degree(), survivors);
}

bool is_semiprimitive(const PermutationGroup& group, std::uint64_t cap) {
  auto elements = group.elements(cap);
  std::unordered_set<Permutation, PermutationHash> done;
  for (const auto& g : elements) {
    if (g.is_identity() || done.contains(g)) continue;
    bool has_fixed_point = false;
    for (Point p = 0; p < g.degree() && !has_fixed_point; ++p) {
      has_fixed_point = g.fixes(p);
    }
    if (!has_fixed_point) continue;
    // Conjugates share a normal closure, so one test covers the class.
    std::vector<Permutation> cls{g};
    done.insert(g);
    for (std::size_t q = 0; q < cls.size(); ++q) {
      for (const auto& s : group.generators()) {
        Permutation c = cls[q].conjugate_by(s);
        if (done.insert(c).second) cls.push_back(std::move(c));
      }
    }
    if (orbits(normal_closure(group, g)).size() != 1) return false;
  }
  return true;
}

PermutationGroup conjugate_group(const PermutationGroup& group,
                                 const Permutation& sigma) {
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) gens.push_back(g.conjugate_by(sigma));
  return PermutationGroup(group.degree(), std::move(gens));
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&b](const Permutation& g) { return b.contains(g); });
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const PermutationGroup& g1, const PermutationGroup& g2)
      : g1_(g1), g2_(g2), degree_(g1.degree()) {
    // Pointwise stabilisers of 0..r-1 in g1 are fixed along the search.
    std::vector<Point> natural(degree_);
    for (Point p = 0; p < degree_; ++p) natural[p] = p;
    StabiliserChain chain1 = build_chain(g1, natural);
    for (std::size_t r = 0; r < degree_; ++r) {
      PermutationGroup stab(degree_, chain1.stabiliser_generators(r));
      stab_order1_.push_back(stab.order());
      orbit_len1_.push_back(orbit_of(stab, static_cast<Point>(r)).size());
    }
    for (Point p = 0; p < degree_; ++p) {
      full_orbit1_.push_back(orbit_of(g1, p).size());
      full_orbit2_.push_back(orbit_of(g2, p).size());
    }
  }

  std::optional<Permutation> run() {
    images_.assign(degree_, 0);
    used_.assign(degree_, false);
    if (search(0)) return Permutation(images_);
    return std::nullopt;
  }

 private:
  bool search(std::size_t r) {
    if (r == degree_) return leaf_check();
    std::span<const Point> assigned(images_.data(), r);
    PermutationGroup stab2 = pointwise_stabiliser(g2_, assigned);
    if (stab2.order() != stab_order1_[r]) return false;
    for (Point q = 0; q < degree_; ++q) {
      if (used_[q] || full_orbit2_[q] != full_orbit1_[r]) continue;
      if (orbit_of(stab2, q).size() != orbit_len1_[r]) continue;
      images_[r] = q;
      used_[q] = true;
      if (search(r + 1)) return true;
      used_[q] = false;
    }
    return false;
  }

  bool leaf_check() const {
    Permutation sigma(images_);
    for (const auto& g : g1_.generators()) {
      if (!g2_.contains(g.conjugate_by(sigma))) return false;
    }
    return true;
  }

  const PermutationGroup& g1_;
  const PermutationGroup& g2_;
  std::size_t degree_;
  std::vector<BigInt> stab_order1_;
  std::vector<std::size_t> orbit_len1_;
  std::vector<std::size_t> full_orbit1_;
  std::vector<std::size_t> full_orbit2_;
  std::vector<Point> images_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> permutation_isomorphic(const PermutationGroup& g1,
                                                  const PermutationGroup& g2) {
  if (g1.degree() != g2.degree() || g1.order() != g2.order()) {
    return std::nullopt;
  }
  return IsomorphismSearch(g1, g2).run();
}

}  // namespace grestrict

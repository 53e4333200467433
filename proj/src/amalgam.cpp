#include "grestrict/amalgam.hpp"

#include <algorithm>

#include "grestrict/errors.hpp"

namespace grestrict {

using Index = AmalgamStar::Index;

AmalgamStar::AmalgamStar(const LocalGroupAnalysis& analysis, std::size_t n,
                         std::uint64_t cap)
    : analysis_(analysis), n_(n) {
  if (analysis.verdict != Verdict::kNotRestrictive) {
    throw InputError("construction requires intransitive non-semiregular L (verdict " +
                     to_string(analysis.verdict) + ")");
  }
  if (n < 2) throw InputError("n must be at least 2");

  BigInt l_order = analysis.order;
  BigInt w_order = analysis.stabiliser_orders.front();
  BigInt a_order = l_order;
  for (std::size_t j = 0; j < n; ++j) {
    a_order *= w_order;
    if (a_order > cap) {
      throw CapacityError("|A| = |L||L_w1|^n exceeds the carrier cap", cap);
    }
  }
  order_ = static_cast<std::size_t>(a_order);
  tail_count_ = order_ / static_cast<std::size_t>(l_order);

  const PermutationGroup& L = analysis.source;
  l_elements_ = L.elements(cap);
  w_elements_ = analysis.stabilisers.front().elements(cap);
  for (std::uint32_t i = 0; i < l_elements_.size(); ++i) {
    l_index_.emplace(l_elements_[i], i);
  }
  std::size_t m = l_elements_.size();
  l_table_.resize(m * m);
  l_inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      l_table_[a * m + b] = l_index_.at(l_elements_[a] * l_elements_[b]);
    }
    l_inverse_[a] = l_index_.at(l_elements_[a].inverse());
  }
  l_to_w_.assign(m, -1);
  for (std::uint32_t w = 0; w < w_elements_.size(); ++w) {
    std::uint32_t l = l_index_.at(w_elements_[w]);
    l_to_w_[l] = static_cast<std::int32_t>(w);
    w_to_l_.push_back(l);
  }
  for (Point rep : analysis.orbit_reps) {
    std::vector<bool> fixes(m);
    for (std::size_t a = 0; a < m; ++a) fixes[a] = l_elements_[a].fixes(rep);
    l_in_stabiliser_.push_back(std::move(fixes));
  }
}

std::size_t AmalgamStar::edge_order(std::size_t edge) const {
  if (edge >= k()) throw InputError("edge index out of range");
  return static_cast<std::size_t>(analysis_.stabiliser_orders[edge]) * tail_count_;
}

std::vector<std::uint32_t> AmalgamStar::digits(Index x) const {
  std::vector<std::uint32_t> d(n_ + 1);
  std::size_t w = w_elements_.size();
  std::size_t rest = x % tail_count_;
  for (std::size_t j = n_; j >= 1; --j) {
    d[j] = static_cast<std::uint32_t>(rest % w);
    rest /= w;
  }
  d[0] = static_cast<std::uint32_t>(x / tail_count_);
  return d;
}

Index AmalgamStar::encode(const std::vector<std::uint32_t>& d) const {
  std::size_t value = d[0];
  for (std::size_t j = 1; j <= n_; ++j) value = value * w_elements_.size() + d[j];
  return static_cast<Index>(value);
}

AElement AmalgamStar::element(Index x) const {
  if (x >= order_) throw InputError("element index out of range");
  auto d = digits(x);
  AElement a{.head = l_elements_[d[0]], .tail = {}};
  for (std::size_t j = 1; j <= n_; ++j) a.tail.push_back(w_elements_[d[j]]);
  return a;
}

Index AmalgamStar::index_of(const AElement& a) const {
  if (a.tail.size() != n_) throw InputError("element has the wrong tail length");
  auto head = l_index_.find(a.head);
  if (head == l_index_.end()) throw InputError("head is not an element of L");
  std::vector<std::uint32_t> d(n_ + 1);
  d[0] = head->second;
  for (std::size_t j = 0; j < n_; ++j) {
    auto it = l_index_.find(a.tail[j]);
    if (it == l_index_.end() || l_to_w_[it->second] < 0) {
      throw InputError("tail entry is not an element of L_w1");
    }
    d[j + 1] = static_cast<std::uint32_t>(l_to_w_[it->second]);
  }
  return encode(d);
}

Index AmalgamStar::multiply(Index x, Index y) const {
  auto dx = digits(x);
  auto dy = digits(y);
  dx[0] = mul_l(dx[0], dy[0]);
  for (std::size_t j = 1; j <= n_; ++j) {
    dx[j] = static_cast<std::uint32_t>(
        l_to_w_[mul_l(w_to_l_[dx[j]], w_to_l_[dy[j]])]);
  }
  return encode(dx);
}

Index AmalgamStar::inverse(Index x) const {
  auto d = digits(x);
  d[0] = l_inverse_[d[0]];
  for (std::size_t j = 1; j <= n_; ++j) {
    d[j] = static_cast<std::uint32_t>(l_to_w_[l_inverse_[w_to_l_[d[j]]]]);
  }
  return encode(d);
}

bool AmalgamStar::in_edge_group(std::size_t edge, Index x) const {
  return l_in_stabiliser_.at(edge)[head_index(x)];
}

Index AmalgamStar::phi(std::size_t edge, Index c) const {
  if (!in_edge_group(edge, c)) {
    throw InputError("phi: element is not in C_" + std::to_string(edge + 1));
  }
  if (edge >= 2) return c;
  auto d = digits(c);
  if (edge == 1) {
    std::reverse(d.begin() + 1, d.end());
    return encode(d);
  }
  // Full reversal of (x_0; x_1..x_n); x_0 lies in L_w1 here.
  std::vector<std::uint32_t> r(n_ + 1);
  r[0] = w_to_l_[d[n_]];
  for (std::size_t j = 1; j < n_; ++j) r[j] = d[n_ - j];
  r[n_] = static_cast<std::uint32_t>(l_to_w_[d[0]]);
  return encode(r);
}

std::vector<Index> AmalgamStar::generators() const {
  std::vector<Index> gens;
  std::vector<std::uint32_t> d(n_ + 1, 0);
  for (const auto& g : analysis_.source.generators()) {
    if (g.is_identity()) continue;
    d[0] = l_index_.at(g);
    gens.push_back(encode(d));
  }
  d[0] = 0;
  for (const auto& g : analysis_.stabilisers.front().generators()) {
    if (g.is_identity()) continue;
    for (std::size_t j = 1; j <= n_; ++j) {
      std::fill(d.begin() + 1, d.end(), 0);
      d[j] = static_cast<std::uint32_t>(l_to_w_[l_index_.at(g)]);
      gens.push_back(encode(d));
    }
  }
  return gens;
}

std::vector<Index> AmalgamStar::edge_generators(std::size_t edge) const {
  std::vector<Index> gens;
  std::vector<std::uint32_t> d(n_ + 1, 0);
  for (const auto& g : analysis_.stabilisers.at(edge).generators()) {
    if (g.is_identity()) continue;
    d[0] = l_index_.at(g);
    gens.push_back(encode(d));
  }
  for (Index x : generators()) {
    if (head_index(x) == 0) gens.push_back(x);
  }
  return gens;
}

std::vector<Index> AmalgamStar::edge_elements(std::size_t edge) const {
  std::vector<Index> result;
  result.reserve(edge_order(edge));
  for (Index x = 0; x < order_; ++x) {
    if (in_edge_group(edge, x)) result.push_back(x);
  }
  return result;
}

AElement AmalgamStar::multiply(const AElement& u, const AElement& v) const {
  return element(multiply(index_of(u), index_of(v)));
}

AElement AmalgamStar::phi(std::size_t edge, const AElement& c) const {
  return element(phi(edge, index_of(c)));
}

BElement AmalgamStar::multiply(const BElement& u, const BElement& v) const {
  if (u.edge != v.edge || u.edge >= k()) {
    throw InputError("B-elements must belong to the same edge group");
  }
  Index c = index_of(u.base);
  Index c2 = index_of(v.base);
  if (!in_edge_group(u.edge, c) || !in_edge_group(u.edge, c2)) {
    throw InputError("B-element base is not in C_" + std::to_string(u.edge + 1));
  }
  Index twisted = u.epsilon ? phi(u.edge, c2) : c2;
  return BElement{.edge = u.edge,
                  .base = element(multiply(c, twisted)),
                  .epsilon = u.epsilon != v.epsilon};
}

// ---------------------------------------------------------------------------

StarValidation validate_star(const AmalgamStar& star) {
  StarValidation report;
  const auto& analysis = star.analysis();

  report.phi_involutive = true;
  report.phi_multiplicative = true;
  for (std::size_t e = 0; e < star.k(); ++e) {
    auto elems = star.edge_elements(e);
    auto gens = star.edge_generators(e);
    for (Index c : elems) {
      Index image = star.phi(e, c);
      if (!star.in_edge_group(e, image) || star.phi(e, image) != c) {
        report.phi_involutive = false;
      }
      for (Index g : gens) {
        if (star.phi(e, star.multiply(c, g)) !=
            star.multiply(image, star.phi(e, g))) {
          report.phi_multiplicative = false;
        }
      }
    }
    if (!report.phi_involutive) {
      throw ValidationError("phi-involution",
                            "phi_" + std::to_string(e + 1) + " is not an involution");
    }
    if (!report.phi_multiplicative) {
      throw ValidationError("phi-automorphism", "phi_" + std::to_string(e + 1) +
                                                    " is not multiplicative");
    }
  }

  report.indices_consistent = true;
  BigInt tail = 1;
  for (std::size_t j = 0; j < star.n(); ++j) tail *= analysis.stabiliser_orders.front();
  if (BigInt(star.order()) != analysis.order * tail) report.indices_consistent = false;
  for (std::size_t e = 0; e < star.k(); ++e) {
    if (star.edge_elements(e).size() != star.edge_order(e) ||
        BigInt(star.edge_order(e)) != analysis.stabiliser_orders[e] * tail ||
        BigInt(star.edge_index(e)) != analysis.order / analysis.stabiliser_orders[e]) {
      report.indices_consistent = false;
    }
    // b_i has order 2 and lies outside C_i, so |B_i : C_i| = 2.
    BElement b{.edge = e, .base = star.element(0), .epsilon = true};
    BElement square = star.multiply(b, b);
    if (square.epsilon || star.index_of(square.base) != 0) {
      report.indices_consistent = false;
    }
  }
  if (!report.indices_consistent) {
    throw ValidationError("indices", "|A|, |C_i| or |A:C_i| disagree with L");
  }

  std::vector<bool> in_all(star.order(), true);
  for (Index x = 0; x < star.order(); ++x) {
    for (std::size_t e = 0; e < star.k() && in_all[x]; ++e) {
      in_all[x] = star.in_edge_group(e, x);
    }
  }
  std::size_t core_order = 0;
  bool matches = true;
  for (Index d = 0; d < star.order(); ++d) {
    bool in_core = in_all[d];
    for (Index a = 0; a < star.order() && in_core; ++a) {
      in_core = in_all[star.multiply(star.multiply(star.inverse(a), d), a)];
    }
    if (in_core) ++core_order;
    if (in_core != (star.head_index(d) == 0)) matches = false;
  }
  report.core_order = core_order;
  report.core_is_tail_subgroup = matches;
  if (!matches) {
    throw ValidationError("core", "core of the edge-group intersection is not 1 x L_w1^n");
  }
  return report;
}

std::uint32_t LocalModel::act(const AmalgamStar& star, std::uint32_t q,
                              AmalgamStar::Index x) const {
  const auto& nb = neighbours[q];
  return coset_of[nb.edge][star.multiply(nb.rep, x)];
}

LocalModel local_model(const AmalgamStar& star) {
  LocalModel model;
  const auto& analysis = star.analysis();
  std::size_t degree = analysis.source.degree();

  model.coset_of.assign(star.k(), std::vector<std::uint32_t>(star.order(), 0));
  for (std::size_t e = 0; e < star.k(); ++e) {
    std::vector<bool> assigned(star.order(), false);
    auto elems = star.edge_elements(e);
    for (Index a = 0; a < star.order(); ++a) {
      if (assigned[a]) continue;
      auto q = static_cast<std::uint32_t>(model.neighbours.size());
      model.neighbours.push_back(
          {.edge = e, .rep = a, .label = star.head(a)(analysis.orbit_reps[e])});
      for (Index c : elems) {
        Index member = star.multiply(c, a);
        assigned[member] = true;
        model.coset_of[e][member] = q;
        // The label must not depend on the coset representative.
        if (star.head(member)(analysis.orbit_reps[e]) != model.neighbours[q].label) {
          throw TheoryViolation("neighbour label is not well defined");
        }
      }
    }
  }

  if (model.neighbours.size() != degree) {
    throw TheoryViolation("local model has " + std::to_string(model.neighbours.size()) +
                          " neighbours, expected " + std::to_string(degree));
  }
  std::vector<bool> hit(degree, false);
  for (const auto& nb : model.neighbours) {
    if (hit[nb.label]) throw TheoryViolation("neighbour labelling is not injective");
    hit[nb.label] = true;
  }

  for (Index g : star.generators()) {
    std::vector<Point> images(degree);
    for (std::uint32_t q = 0; q < degree; ++q) images[q] = model.act(star, q, g);
    model.generator_action.emplace_back(std::move(images));
  }

  // Each element moves labels exactly as its head moves points of L.
  for (Index x = 0; x < star.order(); ++x) {
    bool trivial = true;
    const Permutation& head = star.head(x);
    for (std::uint32_t q = 0; q < degree; ++q) {
      std::uint32_t r = model.act(star, q, x);
      if (model.neighbours[r].label != head(model.neighbours[q].label)) {
        throw TheoryViolation("local action does not factor through the head");
      }
      trivial = trivial && r == q;
    }
    if (trivial) model.kernel.push_back(x);
  }
  for (Index x : model.kernel) {
    if (star.head_index(x) != 0) {
      throw TheoryViolation("local action kernel is not 1 x L_w1^n");
    }
  }
  if (model.kernel.size() != star.order() / star.local_elements().size()) {
    throw TheoryViolation("local action kernel is not 1 x L_w1^n");
  }
  return model;
}

}  // namespace grestrict

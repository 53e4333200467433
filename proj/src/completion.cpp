#include "grestrict/completion.hpp"

#include <algorithm>
#include <random>

#include "grestrict/errors.hpp"

namespace grestrict {

using Index = AmalgamStar::Index;

namespace {

constexpr std::size_t kTableLimit = 2048;

std::vector<std::uint32_t> identity_pairing(std::size_t size) {
  std::vector<std::uint32_t> p(size);
  for (std::uint32_t o = 0; o < size; ++o) p[o] = o;
  return p;
}

// Pairs coset q with q^1 inside every copy.
std::vector<std::uint32_t> within_copy_pairing(std::size_t t, std::size_t K) {
  auto p = identity_pairing(t * K);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t q = 0; q + 1 < K; q += 2) {
      std::size_t o = j * K + q;
      p[o] = static_cast<std::uint32_t>(o + 1);
      p[o + 1] = static_cast<std::uint32_t>(o);
    }
  }
  return p;
}

// Pairs copy j with copy j^1; an odd last copy is paired within itself.
std::vector<std::uint32_t> copy_swap_pairing(std::size_t t, std::size_t K) {
  auto p = identity_pairing(t * K);
  for (std::size_t j = 0; j + 1 < t; j += 2) {
    for (std::size_t q = 0; q < K; ++q) {
      p[j * K + q] = static_cast<std::uint32_t>((j + 1) * K + q);
      p[(j + 1) * K + q] = static_cast<std::uint32_t>(j * K + q);
    }
  }
  if (t % 2 == 1) {
    auto last = within_copy_pairing(1, K);
    for (std::size_t q = 0; q < K; ++q) {
      p[(t - 1) * K + q] = static_cast<std::uint32_t>((t - 1) * K + last[q]);
    }
  }
  return p;
}

bool twisted(std::size_t edge) { return edge < 2; }

std::vector<std::uint32_t> default_pairing(const AmalgamStar& star, std::size_t edge,
                                           std::size_t t) {
  std::size_t K = star.edge_index(edge);
  if (twisted(edge)) return identity_pairing(t * K);
  return t >= 2 ? copy_swap_pairing(t, K) : within_copy_pairing(t, K);
}

std::vector<std::uint32_t> random_pairing(std::mt19937_64& rng, std::size_t size) {
  std::vector<std::uint32_t> order = identity_pairing(size);
  for (std::size_t i = size; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  auto p = identity_pairing(size);
  for (std::size_t q = 0; q + 1 < size; q += 2) {
    if (rng() % 2 == 0) continue;
    p[order[q]] = order[q + 1];
    p[order[q + 1]] = order[q];
  }
  return p;
}

CompletionStrategy uniform_strategy(const AmalgamStar& star, std::size_t t,
                                    const std::string& kind) {
  CompletionStrategy s;
  s.t = t;
  s.label = kind;
  for (std::size_t e = 0; e < star.k(); ++e) {
    std::size_t K = star.edge_index(e);
    s.pairing.push_back(kind == "copy-swap" ? copy_swap_pairing(t, K)
                                            : within_copy_pairing(t, K));
    s.offsets.emplace_back(t * K, 0);
  }
  return s;
}

CompletionStrategy random_strategy(const AmalgamStar& star, std::size_t t,
                                   std::uint64_t seed, std::size_t round,
                                   bool keep_copies) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(round)};
  std::mt19937_64 rng(seq);
  CompletionStrategy s;
  s.t = t;
  s.seed = seed;
  s.label = "random #" + std::to_string(round);
  for (std::size_t e = 0; e < star.k(); ++e) {
    std::size_t K = star.edge_index(e);
    s.pairing.push_back(keep_copies ? default_pairing(star, e, t)
                                    : random_pairing(rng, t * K));
    auto elems = star.edge_elements(e);
    std::vector<Index> off(t * K);
    for (auto& d : off) d = elems[rng() % elems.size()];
    s.offsets.push_back(std::move(off));
  }
  return s;
}

bool cheap_checks_pass(const CompletionReport& r) {
  if (!r.v4) return false;
  return std::all_of(r.edges.begin(), r.edges.end(),
                     [](const auto& e) { return e.v1 && e.v2; });
}

}  // namespace

// ---------------------------------------------------------------------------

Carrier::Carrier(std::shared_ptr<const AmalgamStar> star, std::size_t t,
                 std::uint64_t cap)
    : star_(std::move(star)), t_(t) {
  if (t == 0) throw InputError("carrier needs at least one copy");
  if (static_cast<std::uint64_t>(t) * star_->order() > cap) {
    throw CapacityError("carrier size t|A| exceeds the carrier cap", cap);
  }
  std::size_t N = star_->order();
  if (N <= kTableLimit) {
    table_.resize(N * N);
    for (Index x = 0; x < N; ++x) {
      for (Index y = 0; y < N; ++y) table_[x * N + y] = star_->multiply(x, y);
    }
  }
  for (Index g : star_->generators()) rho_generators_.push_back(rho(g));
}

Index Carrier::multiply(Index x, Index y) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(x) * star_->order() + y];
  return star_->multiply(x, y);
}

Permutation Carrier::rho(Index a) const {
  std::size_t N = star_->order();
  std::vector<Point> images(degree());
  for (Index x = 0; x < N; ++x) {
    Index y = multiply(x, a);
    for (std::size_t j = 0; j < t_; ++j) images[j * N + x] = point(y, j);
  }
  return Permutation(std::move(images));
}

PermutationGroup Carrier::rho_group() const {
  return PermutationGroup(degree(), rho_generators_);
}

std::optional<Index> Carrier::rho_preimage(const Permutation& x) const {
  if (x.degree() != degree()) return std::nullopt;
  std::size_t N = star_->order();
  Point p = x(0);
  if (p >= N) return std::nullopt;
  auto a = static_cast<Index>(p);
  for (Index y = 0; y < N; ++y) {
    Index image = multiply(y, a);
    for (std::size_t j = 0; j < t_; ++j) {
      if (x(point(y, j)) != point(image, j)) return std::nullopt;
    }
  }
  return a;
}

std::vector<Index> left_coset_representatives(const AmalgamStar& star,
                                              std::size_t edge) {
  std::vector<bool> seen(star.order(), false);
  auto elems = star.edge_elements(edge);
  std::vector<Index> reps;
  for (Index a = 0; a < star.order(); ++a) {
    if (seen[a]) continue;
    reps.push_back(a);
    for (Index c : elems) seen[star.multiply(a, c)] = true;
  }
  return reps;
}

CompletionStrategy default_strategy(const AmalgamStar& star, std::optional<std::size_t> t) {
  std::size_t copies = 1;
  for (std::size_t e = 0; e < star.k(); ++e) {
    if (!twisted(e) && star.edge_index(e) == 1) copies = 2;
  }
  if (t) copies = *t;
  CompletionStrategy s;
  s.t = copies;
  s.label = "default";
  for (std::size_t e = 0; e < star.k(); ++e) {
    s.pairing.push_back(default_pairing(star, e, copies));
    s.offsets.emplace_back(copies * star.edge_index(e), 0);
  }
  return s;
}

Permutation build_involution(const Carrier& carrier, std::size_t edge,
                             const CompletionStrategy& strategy) {
  const AmalgamStar& star = carrier.star();
  if (edge >= star.k()) throw InputError("edge out of range");
  if (strategy.t != carrier.copies() || strategy.pairing.size() != star.k() ||
      strategy.offsets.size() != star.k()) {
    throw InputError("strategy does not match the carrier");
  }
  const auto& sigma = strategy.pairing[edge];
  const auto& offsets = strategy.offsets[edge];
  auto reps = left_coset_representatives(star, edge);
  std::size_t K = reps.size();
  std::size_t orbit_count = carrier.copies() * K;
  if (sigma.size() != orbit_count || offsets.size() != orbit_count) {
    throw InputError("strategy has the wrong number of orbits on edge " +
                     std::to_string(edge + 1));
  }
  for (std::size_t o = 0; o < orbit_count; ++o) {
    if (sigma[o] >= orbit_count || sigma[sigma[o]] != o) {
      throw InputError("pairing on edge " + std::to_string(edge + 1) +
                       " is not an involution");
    }
    if (offsets[o] >= star.order() || !star.in_edge_group(edge, offsets[o])) {
      throw InputError("offset on edge " + std::to_string(edge + 1) + " is not in C_" +
                       std::to_string(edge + 1));
    }
  }

  auto elems = star.edge_elements(edge);
  std::vector<Point> images(carrier.degree());
  for (std::size_t o = 0; o < orbit_count; ++o) {
    std::size_t o2 = sigma[o];
    Index r = carrier.multiply(reps[o % K], offsets[o]);
    Index r2 = carrier.multiply(reps[o2 % K], offsets[o2]);
    for (Index c : elems) {
      images[carrier.point(carrier.multiply(r, c), o / K)] =
          carrier.point(carrier.multiply(r2, star.phi(edge, c)), o2 / K);
    }
  }
  Permutation beta(std::move(images));

  // beta rho(c) beta = rho(phi(c)) on generators of C_edge.
  for (Index c : star.edge_generators(edge)) {
    if (beta * carrier.rho(c) * beta != carrier.rho(star.phi(edge, c))) {
      throw TheoryViolation("involution on edge " + std::to_string(edge + 1) +
                            " does not realise the twist");
    }
  }
  return beta;
}

std::vector<Permutation> CompletionCandidate::group_generators() const {
  std::vector<Permutation> gens = carrier->rho_generators();
  gens.insert(gens.end(), beta.begin(), beta.end());
  return gens;
}

CompletionCandidate make_candidate(std::shared_ptr<const Carrier> carrier,
                                   CompletionStrategy strategy) {
  CompletionCandidate c{.carrier = std::move(carrier), .beta = {},
                        .strategy = std::move(strategy), .generated = {}};
  for (std::size_t e = 0; e < c.carrier->star().k(); ++e) {
    c.beta.push_back(build_involution(*c.carrier, e, c.strategy));
  }
  c.generated.emplace(c.carrier->degree(), c.group_generators());
  return c;
}

// ---------------------------------------------------------------------------

bool CompletionReport::accepted() const {
  return cheap_checks_pass(*this) && v3.value_or(false);
}

std::string CompletionReport::first_failure() const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].v1) return "V1 on edge " + std::to_string(e + 1);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].v2) return "V2 on edge " + std::to_string(e + 1);
  }
  if (!v4) return "V4";
  if (!v3) return "V3 not evaluated";
  if (!*v3) return "V3";
  return "";
}

CompletionReport verify_completion(const CompletionCandidate& candidate, bool full) {
  const Carrier& carrier = *candidate.carrier;
  const AmalgamStar& star = carrier.star();
  CompletionReport report;
  report.a_order = star.order();

  std::vector<Permutation> rho_all;
  rho_all.reserve(star.order());
  for (Index a = 0; a < star.order(); ++a) rho_all.push_back(carrier.rho(a));

  for (std::size_t e = 0; e < star.k(); ++e) {
    const Permutation& beta = candidate.beta[e];
    CompletionReport::Edge check;
    check.v2 = (beta * beta).is_identity() && !carrier.rho_preimage(beta);
    bool inside = true;
    for (Index a = 0; a < star.order(); ++a) {
      if (carrier.rho_preimage(beta * rho_all[a] * beta)) {
        ++check.intersection_order;
        inside = inside && star.in_edge_group(e, a);
      }
    }
    check.v1 = inside && check.intersection_order == star.edge_order(e);
    report.edges.push_back(check);
  }

  // Neighbour cosets A beta_i rho(a) are pairwise distinct.
  LocalModel model = local_model(star);
  const auto& nbs = model.neighbours;
  report.v4 = true;
  for (std::size_t p = 0; p < nbs.size() && report.v4; ++p) {
    for (std::size_t q = p + 1; q < nbs.size(); ++q) {
      Index diff = carrier.multiply(nbs[p].rep, star.inverse(nbs[q].rep));
      Permutation x = candidate.beta[nbs[p].edge] * rho_all[diff] * candidate.beta[nbs[q].edge];
      if (carrier.rho_preimage(x)) {
        report.v4 = false;
        break;
      }
    }
  }

  if (!full && !cheap_checks_pass(report)) return report;

  const PermutationGroup& G = candidate.group();
  report.group_order = G.order();
  std::uint64_t cap = std::max<std::uint64_t>(kDefaultEnumerationCap, star.order());
  report.v3 = core(G, carrier.rho_group(), cap).is_trivial();

  bool all_v1 = std::all_of(report.edges.begin(), report.edges.end(),
                            [](const auto& e) { return e.v1; });
  if (all_v1 && !*report.v3) {
    throw TheoryViolation("V1 holds on every edge but rho(A) has a nontrivial core");
  }
  return report;
}

// ---------------------------------------------------------------------------

CompletionSearch find_completion(std::shared_ptr<const AmalgamStar> star,
                                 const CompletionConfig& config) {
  CompletionSearch search;
  std::size_t t0 = default_strategy(*star).t;

  // Returns true once the search should stop.
  auto attempt = [&](const std::shared_ptr<const Carrier>& carrier,
                     CompletionStrategy strategy) {
    if (search.attempts.size() >= config.max_attempts) return true;
    CompletionAttempt record{.label = strategy.label, .t = strategy.t, .failure = {}};
    auto candidate = make_candidate(carrier, std::move(strategy));
    auto report = verify_completion(candidate, false);
    if (cheap_checks_pass(report)) report = verify_completion(candidate, true);
    record.failure = report.first_failure();
    search.attempts.push_back(record);
    if (!report.accepted()) return false;
    search.candidate = std::move(candidate);
    search.report = std::move(report);
    return true;
  };

  for (std::size_t t = t0; t <= config.max_copies; ++t) {
    if (search.attempts.size() >= config.max_attempts) break;
    std::shared_ptr<const Carrier> carrier;
    try {
      carrier = std::make_shared<const Carrier>(star, t, config.carrier_cap);
    } catch (const CapacityError&) {
      search.attempts.push_back({.label = "carrier", .t = t, .failure = "carrier cap"});
      break;
    }
    if (attempt(carrier, default_strategy(*star, t))) return search;
    if (attempt(carrier, uniform_strategy(*star, t, "within-copy"))) return search;
    if (t >= 2 && attempt(carrier, uniform_strategy(*star, t, "copy-swap"))) return search;
    std::size_t rounds = config.random_attempts_per_t;
    for (std::size_t r = 0; r < rounds; ++r) {
      bool keep_copies = r < (rounds + 1) / 2;
      if (attempt(carrier, random_strategy(*star, t, config.seed, r, keep_copies))) {
        return search;
      }
    }
  }
  return search;
}

}  // namespace grestrict

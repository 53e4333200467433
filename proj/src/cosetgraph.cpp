#include "grestrict/cosetgraph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "grestrict/errors.hpp"

namespace grestrict {

using Index = AmalgamStar::Index;

// ---------------------------------------------------------------------------
// FiniteGraph

FiniteGraph FiniteGraph::from_edges(
    std::size_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  FiniteGraph g;
  g.vertex_count = vertex_count;
  g.adjacency.assign(vertex_count, {});
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} is out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& adj = g.adjacency[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw InputError("repeated edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency) total += adj.size();
  return total / 2;
}

bool FiniteGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= vertex_count || v >= vertex_count) return false;
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

bool FiniteGraph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == vertex_count;
}

std::optional<std::size_t> FiniteGraph::valency() const {
  if (vertex_count == 0) return std::nullopt;
  std::size_t d = adjacency[0].size();
  for (const auto& adj : adjacency) {
    if (adj.size() != d) return std::nullopt;
  }
  return d;
}

// ---------------------------------------------------------------------------
// CosetEnumeration

std::size_t CosetEnumeration::KeyHash::operator()(const std::vector<Point>& k) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : k) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

CosetEnumeration::CosetEnumeration(const CompletionCandidate& candidate)
    : candidate_(&candidate), base_(candidate.group().chain().base()) {}

namespace {

// The a minimising x((a, 0)).
Index canonical_shift(const Carrier& carrier, const Permutation& x) {
  std::size_t N = carrier.star().order();
  Index best = 0;
  for (Index a = 1; a < N; ++a) {
    if (x(a) < x(best)) best = a;
  }
  return best;
}

}  // namespace

std::vector<Point> CosetEnumeration::key(const Permutation& x) const {
  const Carrier& carrier = *candidate_->carrier;
  std::size_t N = carrier.star().order();
  Index a = canonical_shift(carrier, x);
  std::vector<Point> k(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Point b = base_[i];
    Point shifted = carrier.point(carrier.multiply(static_cast<Index>(b % N), a), b / N);
    k[i] = x(shifted);
  }
  return k;
}

Permutation CosetEnumeration::canonical(const Permutation& x) const {
  const Carrier& carrier = *candidate_->carrier;
  return carrier.rho(canonical_shift(carrier, x)) * x;
}

Permutation CosetEnumeration::element(const std::vector<Point>& k) const {
  auto x = candidate_->group().chain().element_from_base_images(k);
  if (!x) throw TheoryViolation("coset key does not belong to the group");
  return *x;
}

bool CosetEnumeration::enumerate(std::uint64_t cap) {
  keys_.clear();
  ids_.clear();
  transitions_.clear();
  complete_ = false;
  const auto& G = candidate_->group();
  BigInt index = G.order() / candidate_->carrier->star().order();
  if (index > cap) return false;

  auto gens = candidate_->group_generators();
  transitions_.assign(gens.size(), {});
  auto start = key(Permutation(G.degree()));
  ids_.emplace(start, 0);
  keys_.push_back(start);
  for (std::uint32_t v = 0; v < keys_.size(); ++v) {
    Permutation x = element(keys_[v]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto k = key(x * gens[g]);
      auto [it, inserted] = ids_.emplace(k, static_cast<std::uint32_t>(keys_.size()));
      if (inserted) {
        if (keys_.size() >= cap) {
          keys_.clear();
          ids_.clear();
          transitions_.clear();
          return false;
        }
        keys_.push_back(std::move(k));
      }
      transitions_[g].push_back(it->second);
    }
  }
  complete_ = true;
  return true;
}

std::optional<std::uint32_t> CosetEnumeration::find(const Permutation& x) const {
  auto it = ids_.find(key(x));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// build_graph

namespace {

Permutation random_element(std::mt19937_64& rng, const std::vector<Permutation>& gens,
                           std::size_t degree) {
  Permutation x(degree);
  for (int step = 0; step < 24; ++step) x = x * gens[rng() % gens.size()];
  return x;
}

}  // namespace

ConstructedGraph build_graph(const CompletionCandidate& candidate, std::uint64_t vertex_cap,
                             std::uint64_t check_seed) {
  const Carrier& carrier = *candidate.carrier;
  const AmalgamStar& star = carrier.star();
  if (star.k() < 2) throw TheoryViolation("star has fewer than two edges");
  const PermutationGroup& G = candidate.group();

  ConstructedGraph out;
  out.group_order = G.order();
  if (out.group_order % star.order() != 0) {
    throw TheoryViolation("|A| does not divide |G|");
  }
  out.vertex_count = out.group_order / star.order();
  out.stabiliser_order = star.order();

  CosetEnumeration cosets(candidate);

  // Coset keys agree with membership of x y^-1 in rho(A).
  {
    std::mt19937_64 rng(check_seed);
    auto gens = candidate.group_generators();
    for (int i = 0; i < 1000; ++i) {
      Permutation x = random_element(rng, gens, carrier.degree());
      Permutation y = i % 2 == 0
                          ? carrier.rho(static_cast<Index>(rng() % star.order())) * x
                          : random_element(rng, gens, carrier.degree());
      bool same_key = cosets.key(x) == cosets.key(y);
      bool same_coset = carrier.rho_preimage(x * y.inverse()).has_value();
      if (same_key != same_coset) throw TheoryViolation("coset key disagrees with membership");
      ++out.key_checks;
    }
  }

  LocalModel model = local_model(star);
  std::vector<Permutation> hops;  // beta_i rho(a) per base neighbour
  std::vector<std::vector<Point>> hop_keys;
  for (const auto& nb : model.neighbours) {
    out.base_neighbours.push_back({.edge = nb.edge, .rep = nb.rep, .vertex = {}});
    hops.push_back(candidate.beta[nb.edge] * carrier.rho(nb.rep));
    hop_keys.push_back(cosets.key(hops.back()));
  }
  out.valency = hops.size();
  auto sorted_keys = hop_keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  if (std::adjacent_find(sorted_keys.begin(), sorted_keys.end()) != sorted_keys.end() ||
      std::find(sorted_keys.begin(), sorted_keys.end(), cosets.key(Permutation(carrier.degree()))) !=
          sorted_keys.end()) {
    throw TheoryViolation("base vertex has fewer than |Omega| distinct neighbours");
  }

  // rho(g) sends rho(A) beta_i rho(a) to rho(A) beta_i rho(a g).
  std::vector<Permutation> hop_inverse;
  for (const auto& h : hops) hop_inverse.push_back(h.inverse());
  for (Index g : star.generators()) {
    std::vector<Point> images(hops.size());
    Permutation rg = carrier.rho(g);
    for (std::uint32_t q = 0; q < hops.size(); ++q) {
      std::uint32_t target = model.act(star, q, g);
      if (!carrier.rho_preimage(hops[q] * rg * hop_inverse[target])) {
        throw TheoryViolation("neighbourhood action disagrees with the local model");
      }
      images[q] = target;
    }
    out.local_generators.emplace_back(std::move(images));
  }

  if (!cosets.enumerate(vertex_cap)) return out;

  std::size_t N = cosets.size();
  if (BigInt(N) != out.vertex_count) {
    throw TheoryViolation("coset enumeration disagrees with |G : A|");
  }
  FiniteGraph graph;
  graph.vertex_count = N;
  graph.adjacency.resize(N);
  for (std::uint32_t v = 0; v < N; ++v) {
    Permutation x = cosets.element(cosets.key_of(v));
    auto& adj = graph.adjacency[v];
    for (const auto& h : hops) {
      auto u = cosets.find(h * x);
      if (!u) throw TheoryViolation("neighbour coset missing from the enumeration");
      adj.push_back(*u);
    }
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end() ||
        std::binary_search(adj.begin(), adj.end(), v)) {
      throw TheoryViolation("valency defect at vertex " + std::to_string(v));
    }
  }
  for (std::uint32_t v = 0; v < N; ++v) {
    for (auto u : graph.adjacency[v]) {
      if (!graph.has_edge(u, v)) throw TheoryViolation("adjacency is not symmetric");
    }
  }
  if (!graph.is_connected()) throw TheoryViolation("coset graph is disconnected");

  for (const auto& t : cosets.transitions()) {
    std::vector<Point> images(t.begin(), t.end());
    out.vertex_generators.emplace_back(std::move(images));
  }
  for (std::size_t q = 0; q < hops.size(); ++q) {
    out.base_neighbours[q].vertex = cosets.find(hops[q]);
  }
  // The first generators of G are those of rho(A).
  for (std::size_t g = 0; g < out.local_generators.size(); ++g) {
    for (std::uint32_t q = 0; q < hops.size(); ++q) {
      std::uint32_t target = out.local_generators[g](q);
      if (out.vertex_generators[g](*out.base_neighbours[q].vertex) !=
          *out.base_neighbours[target].vertex) {
        throw TheoryViolation("vertex action disagrees with the neighbourhood action");
      }
    }
  }
  out.graph = std::move(graph);
  out.explicit_graph = true;
  return out;
}

// ---------------------------------------------------------------------------
// local_action

LocalActionWitness local_action(const ConstructedGraph& constructed,
                                const CompletionCandidate& candidate) {
  const AmalgamStar& star = candidate.carrier->star();
  const PermutationGroup& L = star.analysis().source;
  LocalModel model = local_model(star);
  std::size_t m = constructed.base_neighbours.size();
  if (m != L.degree() || model.neighbours.size() != m) {
    throw TheoryViolation("base valency differs from the degree of L");
  }

  LocalActionWitness w;
  for (std::size_t q = 0; q < m; ++q) {
    const auto& nb = constructed.base_neighbours[q];
    if (nb.edge != model.neighbours[q].edge || nb.rep != model.neighbours[q].rep) {
      throw TheoryViolation("base neighbours are not in local-model order");
    }
    w.labels.push_back(model.neighbours[q].label);
  }
  Permutation psi(m);
  try {
    psi = Permutation(w.labels);
  } catch (const Error&) {
    throw TheoryViolation("neighbour labels are not a bijection onto the points of L");
  }

  PermutationGroup induced(m, constructed.local_generators);
  if (!same_group(conjugate_group(induced, psi), L)) {
    throw TheoryViolation("labelled neighbourhood action is not L");
  }
  auto iso = permutation_isomorphic(induced, L);
  if (!iso) throw TheoryViolation("no permutation isomorphism to L");
  w.isomorphism = *iso;
  w.induced_order = induced.order();
  w.kernel_order = BigInt(star.order()) / w.induced_order;
  BigInt expected = 1;
  for (std::size_t j = 0; j < star.n(); ++j) expected *= star.stabiliser_elements().size();
  if (w.kernel_order != expected) {
    throw TheoryViolation("kernel of the local action is not 1 x L_w1^n");
  }
  return w;
}

// ---------------------------------------------------------------------------
// verify_locally_L

LocallyLCertificate verify_locally_L(const FiniteGraph& graph,
                                     const std::vector<Permutation>& generators,
                                     const PermutationGroup& L) {
  std::size_t N = graph.vertex_count;
  if (N == 0) throw InputError("graph has no vertices");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& s = generators[g];
    if (s.degree() != N) {
      throw InputError("generator " + std::to_string(g + 1) + " has degree " +
                       std::to_string(s.degree()) + ", graph has " + std::to_string(N) +
                       " vertices");
    }
    for (std::uint32_t u = 0; u < N; ++u) {
      for (auto v : graph.adjacency[u]) {
        if (u < v && !graph.has_edge(s(u), s(v))) {
          throw InputError("generator " + std::to_string(g + 1) + " maps edge {" +
                           std::to_string(u) + "," + std::to_string(v) + "} to non-edge {" +
                           std::to_string(s(u)) + "," + std::to_string(s(v)) + "}");
        }
      }
    }
  }

  LocallyLCertificate cert;
  cert.connected = graph.is_connected();
  cert.valency = graph.valency();
  PermutationGroup G(N, generators);
  Point base[] = {0};
  StabiliserChain chain = build_chain(G, base);
  cert.group_order = chain.order();
  std::size_t orbit = chain.depth() > 0 && chain.level(0).base_point == 0
                          ? chain.level(0).orbit.size()
                          : 1;
  cert.vertex_transitive = orbit == N;
  cert.stabiliser_order = cert.group_order / orbit;

  const auto& nbrs = graph.adjacency[0];
  std::size_t d = nbrs.size();
  auto stab_gens = chain.stabiliser_generators(chain.depth() > 0 ? 1 : 0);
  for (const auto& s : stab_gens) {
    std::vector<Point> images(d);
    for (std::size_t q = 0; q < d; ++q) {
      auto it = std::lower_bound(nbrs.begin(), nbrs.end(), s(nbrs[q]));
      images[q] = static_cast<Point>(it - nbrs.begin());
    }
    cert.induced_generators.emplace_back(std::move(images));
  }
  if (d == 0) {
    cert.induced_order = 1;
  } else {
    cert.induced_order = PermutationGroup(d, cert.induced_generators).order();
  }

  if (!cert.connected) {
    cert.reason = "graph is disconnected";
  } else if (!cert.vertex_transitive) {
    cert.reason = "group is not vertex-transitive";
  } else if (d != L.degree()) {
    cert.reason = "valency " + std::to_string(d) + " differs from the degree of L (" +
                  std::to_string(L.degree()) + ")";
  } else {
    auto w = permutation_isomorphic(PermutationGroup(d, cert.induced_generators), L);
    if (w) {
      cert.witness = *w;
      cert.locally_L = true;
    } else {
      cert.reason = "induced local group of order " + cert.induced_order.str() +
                    " is not permutation isomorphic to L (order " + L.order().str() + ")";
    }
  }

  if (predicates(L).is_semiregular) {
    cert.semiregular_bound = cert.stabiliser_order <= d;
    if (cert.locally_L && !*cert.semiregular_bound) {
      throw TheoryViolation("semiregular local action with |G_v| above the valency");
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// growth_report

std::vector<GrowthRow> growth_report(const PermutationGroup& L, std::size_t n_from,
                                     std::size_t n_to, const GrowthConfig& config) {
  std::vector<GrowthRow> rows;
  auto analysis = analyze_local_group(L);
  for (std::size_t n = n_from; n <= n_to; ++n) {
    GrowthRow row;
    row.n = n;
    row.a_order = analysis.order;
    for (std::size_t j = 0; j < n; ++j) row.a_order *= analysis.stabiliser_orders.front();
    try {
      auto star = std::make_shared<const AmalgamStar>(analysis, n, config.completion.carrier_cap);
      auto search = find_completion(star, config.completion);
      row.attempts = search.attempts.size();
      if (!search.accepted()) {
        row.failure = "search exhausted after " + std::to_string(row.attempts) + " attempts";
      } else {
        row.report = search.report;
        row.group_order = search.report->group_order;
        auto built = build_graph(*search.candidate, config.vertex_cap);
        local_action(built, *search.candidate);
        row.explicit_graph = built.explicit_graph;
        if (built.explicit_graph) row.vertex_count = built.vertex_count;
        row.stabiliser_order = built.stabiliser_order;
        row.locally_L = true;
      }
    } catch (const Error& e) {
      row.failure = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Graph formats

namespace {

void append_graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((static_cast<std::uint64_t>(n) >> shift) & 63) + 63));
    }
  }
}

std::string to_graph6(const FiniteGraph& g) {
  std::string out;
  append_graph6_size(out, g.vertex_count);
  int bits = 0;
  int value = 0;
  for (std::uint32_t j = 1; j < g.vertex_count; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  out.push_back('\n');
  return out;
}

FiniteGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.find('\n') != std::string_view::npos) {
    throw ParseError("graph6 input holds more than one graph", 2, 1);
  }
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6 input is truncated", 1, pos + 1);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 1, pos + 1);
    ++pos;
    return c - 63;
  };
  std::uint64_t n = next();
  if (n == 63) {
    n = 0;
    int count = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      count = 6;
    }
    for (int i = 0; i < count; ++i) n = (n << 6) | next();
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  int bits = 0;
  std::uint64_t value = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if (bits == 0) {
        value = next();
        bits = 6;
      }
      --bits;
      if ((value >> bits) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", 1, pos + 1);
  return FiniteGraph::from_edges(n, edges);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  return line;
}

std::vector<std::uint32_t> read_ids(std::string_view text, std::size_t line_no) {
  std::istringstream in{std::string(text)};
  std::vector<std::uint32_t> ids;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token[0] == '-') {
      throw ParseError("expected a vertex id, got '" + token + "'", line_no, 1);
    }
    ids.push_back(static_cast<std::uint32_t>(value));
  }
  return ids;
}

FiniteGraph with_line(std::size_t line, auto&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

}  // namespace

std::string export_graph(const FiniteGraph& graph, GraphFormat format) {
  std::string out;
  switch (format) {
    case GraphFormat::kEdgeList:
      for (std::uint32_t u = 0; u < graph.vertex_count; ++u) {
        for (auto v : graph.adjacency[u]) {
          if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
        }
      }
      return out;
    case GraphFormat::kAdjacencyList:
      for (std::uint32_t u = 0; u < graph.vertex_count; ++u) {
        out += std::to_string(u) + ":";
        for (auto v : graph.adjacency[u]) out += " " + std::to_string(v);
        out += "\n";
      }
      return out;
    case GraphFormat::kGraph6:
      return to_graph6(graph);
  }
  return out;
}

FiniteGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kGraph6) return from_graph6(text);
  auto lines = split_lines(text);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t vertex_count = 0;

  if (format == GraphFormat::kEdgeList) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto line = strip_comment(lines[i]);
      auto ids = read_ids(line, i + 1);
      if (ids.empty()) continue;
      if (ids.size() != 2) throw ParseError("expected two vertex ids", i + 1, 1);
      if (ids[0] == ids[1]) throw ParseError("loop edge", i + 1, 1);
      edges.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
      vertex_count = std::max<std::size_t>(vertex_count, std::max(ids[0], ids[1]) + 1);
    }
    return with_line(1, [&] { return FiniteGraph::from_edges(vertex_count, edges); });
  }

  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> row_line;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = strip_comment(lines[i]);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'v: neighbours'", i + 1, 1);
    auto head = read_ids(line.substr(0, colon), i + 1);
    if (head.size() != 1) throw ParseError("expected one vertex id before ':'", i + 1, 1);
    if (head[0] != rows.size()) {
      throw ParseError("vertices must be listed in order 0, 1, ...", i + 1, 1);
    }
    rows.push_back(read_ids(line.substr(colon + 1), i + 1));
    row_line.push_back(i + 1);
  }
  vertex_count = rows.size();
  for (std::uint32_t u = 0; u < rows.size(); ++u) {
    for (auto v : rows[u]) {
      if (v >= vertex_count) throw ParseError("neighbour out of range", row_line[u], 1);
      if (std::find(rows[v].begin(), rows[v].end(), u) == rows[v].end()) {
        throw ParseError("adjacency is not symmetric: " + std::to_string(u) + " lists " +
                             std::to_string(v),
                         row_line[u], 1);
      }
      if (u < v) edges.emplace_back(u, v);
      if (u == v) throw ParseError("loop edge", row_line[u], 1);
    }
  }
  return with_line(1, [&] { return FiniteGraph::from_edges(vertex_count, edges); });
}

GraphFormat guess_graph_format(std::string_view path, std::string_view text) {
  if (path.ends_with(".g6")) return GraphFormat::kGraph6;
  if (text.find(':') != std::string_view::npos) return GraphFormat::kAdjacencyList;
  return GraphFormat::kEdgeList;
}

}  // namespace grestrict

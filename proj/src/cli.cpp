#include "grestrict/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <span>
#include <sstream>

#include "grestrict/errors.hpp"
#include "grestrict/group_spec.hpp"
#include "json.hpp"

namespace grestrict::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string big(const BigInt& x) { return x.str(); }

Json one_based(std::span<const Point> points) {
  Json arr = Json::array();
  for (Point p : points) arr.push_back(p + 1);
  return arr;
}

Json one_based_images(const Permutation& p) { return one_based(p.images()); }

std::string join_points(const std::vector<Point>& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(points[i] + 1);
  }
  return s + "}";
}

Json group_json(const PermutationGroup& g) {
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(s.to_cycle_string());
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

Json analysis_json(const LocalGroupAnalysis& a) {
  Json orbits = Json::array();
  for (const auto& o : a.orbits) orbits.push_back(one_based(o));
  Json stab = Json::array();
  for (const auto& s : a.stabiliser_orders) stab.push_back(big(s));
  Json j{{"order", big(a.order)},
         {"orbits", orbits},
         {"omega", one_based(a.orbit_reps)},
         {"stabiliser_orders", stab},
         {"transitive", a.transitive},
         {"semiregular", a.semiregular}};
  j["semiprimitive"] = a.semiprimitive ? Json(*a.semiprimitive) : Json(nullptr);
  j["verdict"] = to_string(a.verdict);
  return j;
}

// Runs `body`, mapping library exceptions onto the exit-code contract.
Output guarded(const std::function<Output()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {.exit_code = kInputError, .out = {}, .err = std::string("parse error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {.exit_code = kInputError, .out = {}, .err = std::string("input error: ") + e.what() + "\n"};
  } catch (const CapacityError& e) {
    return {.exit_code = kExhausted, .out = {}, .err = std::string("capacity: ") + e.what() + "\n"};
  } catch (const TheoryViolation& e) {
    return {.exit_code = kNegative, .out = {},
            .err = std::string("internal consistency check failed: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {.exit_code = kInputError, .out = {}, .err = std::string("error: ") + e.what() + "\n"};
  }
}

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value[0] == '-') {
    throw InputError(std::string(kCapsVariable) + ": bad value for " + key + ": '" + value + "'");
  }
  return v;
}

CompletionConfig completion_config(const Caps& caps, std::uint64_t seed) {
  CompletionConfig c;
  c.seed = seed;
  c.max_attempts = caps.attempts;
  c.max_copies = caps.copies;
  c.random_attempts_per_t = caps.random;
  c.carrier_cap = caps.carrier;
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

LocalGroupAnalysis require_not_restrictive(const PermutationGroup& L, const char* command) {
  auto analysis = analyze_local_group(L);
  if (analysis.verdict != Verdict::kNotRestrictive) {
    auto report = restrictive_verdict(analysis);
    throw InputError(std::string(command) + " needs a NOT_RESTRICTIVE group; verdict is " +
                     to_string(analysis.verdict) + " (" + report.summary + ")");
  }
  return analysis;
}

Json checks_json(const CompletionReport& r) {
  Json v1 = Json::array(), v2 = Json::array();
  for (const auto& e : r.edges) {
    v1.push_back(e.v1);
    v2.push_back(e.v2);
  }
  Json j{{"V1", v1}, {"V2", v2}};
  j["V3"] = r.v3 ? Json(*r.v3) : Json(nullptr);
  j["V4"] = r.v4;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

Caps parse_caps(const std::string& spec, Caps caps) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError(std::string(kCapsVariable) + ": expected key=value, got '" + item + "'");
    }
    std::string key = trim(item.substr(0, eq));
    std::string value = trim(item.substr(eq + 1));
    std::uint64_t v = parse_count(key, value);
    if (key == "vertices") {
      caps.max_vertices = v;
    } else if (key == "carrier") {
      caps.carrier = v;
    } else if (key == "attempts") {
      caps.attempts = v;
    } else if (key == "copies") {
      caps.copies = v;
    } else if (key == "random") {
      caps.random = v;
    } else {
      throw InputError(std::string(kCapsVariable) + ": unknown key '" + key + "'");
    }
  }
  return caps;
}

Caps caps_from_environment() {
  const char* value = std::getenv(kCapsVariable);
  return value ? parse_caps(value) : Caps{};
}

// ---------------------------------------------------------------------------

Output cmd_classify(const std::string& group_text, bool json) {
  return guarded([&] {
    auto L = parse_group_spec(group_text);
    auto a = analyze_local_group(L);
    auto r = restrictive_verdict(a);
    Output o;
    if (json) {
      Json j{{"group", group_json(L)}, {"analysis", analysis_json(a)}, {"summary", r.summary}};
      j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
      if (r.witness_base) {
        j["witness"] = Json{{"base", big(*r.witness_base)}, {"ratio", big(*r.witness_ratio)}};
      }
      j["justification"] = r.justification;
      o.out = j.dump(2) + "\n";
      return o;
    }
    std::ostringstream s;
    s << r.summary << "\n";
    s << "verdict: " << to_string(a.verdict) << "\n";
    s << "degree " << L.degree() << ", order " << a.order << "\n";
    s << "orbits:";
    for (const auto& orbit : orbits(L)) s << " " << join_points(orbit);
    s << "\n";
    s << "stabiliser orders:";
    for (std::size_t i = 0; i < a.k(); ++i) {
      s << " |L_" << a.orbit_reps[i] + 1 << "| = " << a.stabiliser_orders[i];
    }
    s << "\n";
    if (a.semiprimitive) s << "semiprimitive: " << (*a.semiprimitive ? "yes" : "no") << "\n";
    s << r.justification << "\n";
    o.out = s.str();
    return o;
  });
}

// ---------------------------------------------------------------------------

Output cmd_construct(const std::string& group_text, const ConstructOptions& options) {
  return guarded([&] {
    auto L = parse_group_spec(group_text);
    auto analysis = require_not_restrictive(L, "construct");
    if (options.n < 2) throw InputError("--n must be at least 2");
    auto star = std::make_shared<const AmalgamStar>(analysis, options.n, options.caps.carrier);
    validate_star(*star);
    auto search = find_completion(star, completion_config(options.caps, options.seed));

    Output o;
    if (!search.accepted()) {
      Json attempts = Json::array();
      for (const auto& a : search.attempts) {
        attempts.push_back(Json{{"strategy", a.label}, {"t", a.t}, {"failed", a.failure}});
      }
      Json failure{{"schema", "grestrict.failure/1"},
                   {"tool_version", GRESTRICT_VERSION},
                   {"group", group_json(L)},
                   {"n", options.n},
                   {"seed", options.seed},
                   {"outcome", "search exhausted"},
                   {"attempts", attempts}};
      std::string text = failure.dump(2) + "\n";
      if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
        write_file(*options.out_dir / "failure.json", text);
      }
      o.exit_code = kExhausted;
      o.out = text;
      o.err = "search exhausted after " + std::to_string(search.attempts.size()) + " attempts\n";
      return o;
    }

    const auto& cand = *search.candidate;
    const auto& report = *search.report;
    auto built = build_graph(cand, options.caps.max_vertices, options.seed);
    auto witness = local_action(built, cand);
    const Carrier& carrier = *cand.carrier;

    Json edge_orders = Json::array(), edge_indices = Json::array();
    for (std::size_t e = 0; e < star->k(); ++e) {
      edge_orders.push_back(std::to_string(star->edge_order(e)));
      edge_indices.push_back(star->edge_index(e));
    }
    Json pairing = Json::array(), offsets = Json::array(), beta = Json::array();
    for (std::size_t e = 0; e < star->k(); ++e) {
      pairing.push_back(cand.strategy.pairing[e]);
      offsets.push_back(cand.strategy.offsets[e]);
      beta.push_back(one_based_images(cand.beta[e]));
    }
    Json rho = Json::array();
    for (const auto& r : carrier.rho_generators()) rho.push_back(one_based_images(r));

    Json neighbours = Json::array();
    for (std::size_t q = 0; q < built.base_neighbours.size(); ++q) {
      const auto& nb = built.base_neighbours[q];
      Json item{{"edge", nb.edge + 1}, {"rep_index", nb.rep}};
      item["vertex"] = nb.vertex ? Json(*nb.vertex) : Json(nullptr);
      item["label"] = witness.labels[q] + 1;
      neighbours.push_back(item);
    }

    Json graph{{"mode", built.explicit_graph ? "explicit" : "implicit"},
               {"vertex_count", big(built.vertex_count)},
               {"valency", built.valency},
               {"stabiliser_order", big(built.stabiliser_order)},
               {"key_checks", built.key_checks}};
    if (built.explicit_graph) {
      graph["edge_count"] = built.graph->edge_count();
      graph["files"] = Json{{"edges", "graph.edges"},
                            {"adjacency", "graph.adj"},
                            {"graph6", "graph.g6"},
                            {"group", "group.txt"}};
    }

    Json cert{{"schema", kCertificateSchema},
              {"tool_version", GRESTRICT_VERSION},
              {"group", group_json(L)},
              {"analysis", analysis_json(analysis)},
              {"n", options.n},
              {"amalgam",
               Json{{"a_order", std::to_string(star->order())},
                    {"edge_orders", edge_orders},
                    {"edge_indices", edge_indices}}},
              {"completion",
               Json{{"seed", options.seed},
                    {"attempts", search.attempts.size()},
                    {"strategy",
                     Json{{"label", cand.strategy.label},
                          {"t", cand.strategy.t},
                          {"pairing", pairing},
                          {"offset_indices", offsets}}},
                    {"carrier_size", carrier.degree()},
                    {"rho_generators", rho},
                    {"beta", beta},
                    {"checks", checks_json(report)},
                    {"group_order", big(*report.group_order)}}},
              {"graph", graph},
              {"local_action",
               Json{{"neighbours", neighbours},
                    {"isomorphism", one_based_images(witness.isomorphism)},
                    {"induced_order", big(witness.induced_order)},
                    {"kernel_order", big(witness.kernel_order)}}}};
    std::string cert_text = cert.dump(2) + "\n";

    std::ostringstream s;
    s << "accepted: strategy '" << cand.strategy.label << "' (t = " << cand.strategy.t
      << ", seed " << options.seed << ") after " << search.attempts.size() << " attempts\n";
    s << "|G| = " << *report.group_order << ", |G_v| = " << built.stabiliser_order
      << ", valency " << built.valency << ", vertices " << built.vertex_count
      << (built.explicit_graph ? "" : " (implicit, not enumerated)") << "\n";
    s << "local action: induced order " << witness.induced_order << ", kernel order "
      << witness.kernel_order << "\n";

    if (options.out_dir) {
      const auto& dir = *options.out_dir;
      std::filesystem::create_directories(dir);
      write_file(dir / "certificate.json", cert_text);
      if (built.explicit_graph) {
        write_file(dir / "graph.edges", export_graph(*built.graph, GraphFormat::kEdgeList));
        write_file(dir / "graph.adj", export_graph(*built.graph, GraphFormat::kAdjacencyList));
        write_file(dir / "graph.g6", export_graph(*built.graph, GraphFormat::kGraph6));
        PermutationGroup vertex_group(built.graph->vertex_count, built.vertex_generators);
        write_file(dir / "group.txt", "# vertex v is point v+1\n" + format_group_spec(vertex_group));
      }
      s << "wrote " << (dir / "certificate.json").string() << "\n";
    }
    o.out = options.json ? cert_text : s.str();
    return o;
  });
}

// ---------------------------------------------------------------------------

Output cmd_verify(const std::string& graph_path, const std::string& graph_text,
                  const std::string& group_text, const std::string& local_text, bool json) {
  return guarded([&] {
    auto graph = parse_graph(graph_text, guess_graph_format(graph_path, graph_text));
    auto G = parse_group_spec(group_text);
    auto L = parse_group_spec(local_text);
    if (G.degree() != graph.vertex_count) {
      throw InputError("group degree " + std::to_string(G.degree()) + " differs from the " +
                       std::to_string(graph.vertex_count) + " graph vertices");
    }
    auto cert = verify_locally_L(graph, G.generators(), L);
    Output o;
    o.exit_code = cert.locally_L ? kOk : kNegative;
    const auto& nbrs = graph.adjacency[0];
    if (json) {
      Json j{{"locally_L", cert.locally_L},
             {"connected", cert.connected},
             {"vertex_transitive", cert.vertex_transitive},
             {"group_order", big(cert.group_order)},
             {"stabiliser_order", big(cert.stabiliser_order)}};
      j["valency"] = cert.valency ? Json(*cert.valency) : Json(nullptr);
      j["induced_order"] = big(cert.induced_order);
      if (cert.witness) {
        Json w = Json::array();
        for (std::size_t q = 0; q < nbrs.size(); ++q) {
          w.push_back(Json{{"vertex", nbrs[q]}, {"point", (*cert.witness)(q) + 1}});
        }
        j["witness"] = w;
      }
      j["semiregular_bound"] =
          cert.semiregular_bound ? Json(*cert.semiregular_bound) : Json(nullptr);
      j["reason"] = cert.reason;
      o.out = j.dump(2) + "\n";
      return o;
    }
    std::ostringstream s;
    s << "locally-L: " << (cert.locally_L ? "yes" : "no");
    if (!cert.reason.empty()) s << " (" << cert.reason << ")";
    s << "\n";
    s << "vertex-transitive: " << (cert.vertex_transitive ? "yes" : "no") << "\n";
    s << "|G| = " << cert.group_order << ", |G_v| = " << cert.stabiliser_order;
    if (cert.valency) s << ", valency " << *cert.valency;
    s << "\n";
    s << "induced local group order " << cert.induced_order << "\n";
    if (cert.witness) {
      s << "witness (neighbour of vertex 0 -> point of L):";
      for (std::size_t q = 0; q < nbrs.size(); ++q) {
        s << " " << nbrs[q] << "->" << (*cert.witness)(q) + 1;
      }
      s << "\n";
    }
    if (cert.semiregular_bound) {
      s << "semiregular bound |G_v| <= valency: " << (*cert.semiregular_bound ? "holds" : "fails")
        << "\n";
    }
    o.out = s.str();
    return o;
  });
}

// ---------------------------------------------------------------------------

Output cmd_report(const std::string& group_text, const ReportOptions& options) {
  return guarded([&] {
    auto L = parse_group_spec(group_text);
    require_not_restrictive(L, "report");
    GrowthConfig config;
    config.completion = completion_config(options.caps, options.seed);
    config.vertex_cap = options.caps.max_vertices;
    auto rows = growth_report(L, options.n_from, options.n_to, config);

    Output o;
    bool all_ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.accepted(); });
    o.exit_code = all_ok ? kOk : kExhausted;

    if (options.json) {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j{{"n", r.n}, {"a_order", big(r.a_order)}};
        j["group_order"] = r.group_order ? Json(big(*r.group_order)) : Json(nullptr);
        j["vertex_count"] = r.vertex_count ? Json(big(*r.vertex_count)) : Json("not enumerated");
        j["checks"] = r.report ? checks_json(*r.report) : Json(nullptr);
        j["stabiliser_order"] = r.stabiliser_order ? Json(big(*r.stabiliser_order)) : Json(nullptr);
        j["locally_L"] = r.locally_L;
        j["attempts"] = r.attempts;
        j["failure"] = r.failure.empty() ? Json(nullptr) : Json(r.failure);
        arr.push_back(j);
      }
      Json j{{"schema", "grestrict.report/1"},
             {"tool_version", GRESTRICT_VERSION},
             {"group", group_json(L)},
             {"seed", options.seed},
             {"rows", arr}};
      o.out = j.dump(2) + "\n";
      return o;
    }

    std::ostringstream s;
    s << "n\t|A|\t|G|\tvertices\tV1-V4\tlocally-L\t|G_v|\n";
    for (const auto& r : rows) {
      s << r.n << "\t" << r.a_order << "\t";
      s << (r.group_order ? r.group_order->str() : "-") << "\t";
      s << (r.vertex_count ? r.vertex_count->str() : "not enumerated") << "\t";
      s << (r.report && r.report->accepted() ? "ok" : "FAIL") << "\t";
      s << (r.locally_L ? "yes" : "no") << "\t";
      s << (r.stabiliser_order ? r.stabiliser_order->str() : "-");
      if (!r.failure.empty()) s << "\t" << r.failure;
      s << "\n";
    }
    o.out = s.str();
    return o;
  });
}

}  // namespace grestrict::cli

// Command-line front end. Exit codes: 0 ok, 1 verification negative,
// 2 input error, 3 search exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grestrict/cli.hpp"
#include "grestrict/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grestrict::InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const grestrict::cli::Output& o) {
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace grestrict::cli;
  CLI::App app{"Graph-restrictiveness of intransitive permutation groups"};
  app.set_version_flag("--version", GRESTRICT_VERSION);
  app.require_subcommand(1);

  std::string group_file, graph_file, local_file;
  bool json = false;
  std::size_t n = 2, n_from = 2, n_to = 4;
  std::uint64_t seed = 0, max_vertices = 0, carrier = 0;
  std::size_t attempts = 0, copies = 0;
  std::string out_dir;

  auto* classify = app.add_subcommand("classify", "Verdict for a local group");
  classify->add_option("group", group_file, "group spec file")->required();
  classify->add_flag("--json", json, "JSON output");

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "search seed")->capture_default_str();
    cmd->add_option("--max-vertices", max_vertices, "coset enumeration cap");
    cmd->add_option("--carrier-cap", carrier, "cap on t|A|");
    cmd->add_option("--max-attempts", attempts, "completion attempt cap");
    cmd->add_option("--max-copies", copies, "largest number of carrier copies");
  };

  auto* construct = app.add_subcommand("construct", "Build and certify a locally-L pair");
  construct->add_option("group", group_file, "group spec file")->required();
  construct->add_option("--n", n, "exponent n >= 2")->required();
  construct->add_option("--out", out_dir, "output directory");
  construct->add_flag("--json", json, "print the certificate");
  add_caps(construct);

  auto* verify = app.add_subcommand("verify", "Check a (graph, group) pair is locally-L");
  verify->add_option("graph", graph_file, "edge list, adjacency list or .g6 file")->required();
  verify->add_option("group", group_file, "vertex permutations (vertex v is point v+1)")
      ->required();
  verify->add_option("local", local_file, "local group L")->required();
  verify->add_flag("--json", json, "JSON output");

  auto* report = app.add_subcommand("report", "Growth table over a range of n");
  report->add_option("group", group_file, "group spec file")->required();
  report->add_option("--n-from", n_from, "first n")->capture_default_str();
  report->add_option("--n-to", n_to, "last n")->capture_default_str();
  report->add_flag("--json", json, "JSON output");
  add_caps(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Caps caps = caps_from_environment();
    auto* active = app.get_subcommands().front();
    auto given = [&](const char* name) {
      auto* opt = active->get_option_no_throw(name);
      return opt && opt->count() > 0;
    };
    if (given("--max-vertices")) caps.max_vertices = max_vertices;
    if (given("--carrier-cap")) caps.carrier = carrier;
    if (given("--max-attempts")) caps.attempts = attempts;
    if (given("--max-copies")) caps.copies = copies;

    if (*classify) return emit(cmd_classify(read_file(group_file), json));
    if (*construct) {
      ConstructOptions o;
      o.n = n;
      o.seed = seed;
      o.caps = caps;
      o.json = json;
      if (!out_dir.empty()) o.out_dir = out_dir;
      return emit(cmd_construct(read_file(group_file), o));
    }
    if (*verify) {
      return emit(cmd_verify(graph_file, read_file(graph_file), read_file(group_file),
                             read_file(local_file), json));
    }
    ReportOptions o;
    o.n_from = n_from;
    o.n_to = n_to;
    o.seed = seed;
    o.caps = caps;
    o.json = json;
    return emit(cmd_report(read_file(group_file), o));
  } catch (const grestrict::Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

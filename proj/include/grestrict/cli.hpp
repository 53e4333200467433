#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "grestrict/cosetgraph.hpp"

namespace grestrict::cli {

inline constexpr const char* kCapsVariable = "GRESTRICT_CAPS";
inline constexpr const char* kCertificateSchema = "grestrict.certificate/1";

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kExhausted = 3,
};

struct Caps {
  std::uint64_t max_vertices = kDefaultVertexCap;
  std::uint64_t carrier = kDefaultCarrierCap;
  std::size_t attempts = CompletionConfig{}.max_attempts;
  std::size_t copies = CompletionConfig{}.max_copies;
  std::size_t random = CompletionConfig{}.random_attempts_per_t;
};

/// Reads "vertices=N,carrier=N,attempts=N,copies=N,random=N" (any subset,
/// any order) over `base`. Throws InputError on unknown keys or bad numbers.
Caps parse_caps(const std::string& spec, Caps base = {});
/// Defaults overridden by the environment variable when set.
Caps caps_from_environment();

struct Output {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

Output cmd_classify(const std::string& group_text, bool json);

struct ConstructOptions {
  std::size_t n = 2;
  std::uint64_t seed = 0;
  Caps caps;
  std::optional<std::filesystem::path> out_dir;
  bool json = false;
};

/// Certificate JSON for an accepted construction, or the failure report.
Output cmd_construct(const std::string& group_text, const ConstructOptions& options);

Output cmd_verify(const std::string& graph_path, const std::string& graph_text,
                  const std::string& group_text, const std::string& local_text, bool json);

struct ReportOptions {
  std::size_t n_from = 2;
  std::size_t n_to = 4;
  std::uint64_t seed = 0;
  Caps caps;
  bool json = false;
};

Output cmd_report(const std::string& group_text, const ReportOptions& options);

}  // namespace grestrict::cli

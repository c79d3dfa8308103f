#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "metanil/catalog.hpp"
#include "metanil/criterion.hpp"

namespace metanil {

struct RunConfig {
  std::string input;               // group: file path or builtin name
  std::string corpus = "builtin";  // corpus: "builtin" or a manifest path
  int k_lo = 1;
  int k_hi = 1;
  ScanMode mode = ScanMode::fast;
  enum class Format { text, json } format = Format::text;
  std::uint64_t cap = kDefaultElementCap;
  int jobs = 1;
};

/// File path when one exists, builtin name otherwise.
Group resolve_group(const std::string& input);
std::vector<CorpusEntry> resolve_corpus(const std::string& corpus);

/// Parses "3" or "1..6" into [lo, hi].
std::pair<int, int> parse_k_range(const std::string& text);

/// The verify report and verdict, separated from printing so the
/// determinism of the canonical-mode report body is directly testable.
struct VerifyOutput {
  std::string report;       // goes to stdout
  std::string diagnostics;  // timing summary, goes to stderr
  bool all_consistent = false;
};
VerifyOutput run_verify(const RunConfig& config);

/// Exit codes: 0 success/consistent, 1 inconsistency or no result,
/// 2 input error, 3 resource cap.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace metanil

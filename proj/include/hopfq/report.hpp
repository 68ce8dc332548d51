#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfq/json_io.hpp"
#include "hopfq/loop.hpp"

namespace hopfq {

enum class Construction { group_algebra, function_algebra, both };
enum class Suite { axioms, integrals, modules, fourier, frobenius, semisimple };
enum class Format { json, text };

std::string_view to_string(Construction c);
std::string_view to_string(Suite s);
std::string_view to_string(Format f);
Construction parse_construction(std::string_view s);
Format parse_format(std::string_view s);
/// Resolves a list of suite names ("all" expands) into dependency order
/// without duplicates. Throws BadParams on unknown or empty input.
std::vector<Suite> parse_suites(const std::vector<std::string>& names);

struct RunConfig {
  std::string command = "report";
  std::optional<std::string> builtin;
  std::optional<std::string> loop_path;
  std::string field = "q";
  Construction construction = Construction::both;
  std::vector<Suite> suites{Suite::axioms};
  Format format = Format::json;
};

struct ReportEntry {
  std::string suite;
  std::string construction;
  Check check;
};

struct RunResult {
  Json document;
  std::vector<ReportEntry> entries;
  /// Per-construction scalar facts shown in text output, e.g. "semisimple=false".
  std::vector<std::string> facts;

  bool conforms() const;
  int exit_code() const { return conforms() ? 0 : 1; }
};

/// Loads the loop named by the config.
LoopTable load_source(const RunConfig& config);

/// Runs the requested suites. Input problems (unreadable loop, bad field,
/// non-IP loop) surface as Error; everything else lands in the report.
RunResult run(const RunConfig& config);

std::string render(const RunResult& result, Format format);

}  // namespace hopfq

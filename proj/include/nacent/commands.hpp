#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nacent/corpus.hpp"

namespace nacent {

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitViolation = 3 };

struct CommandOptions {
  bool json = false;
  Caps caps;
  std::size_t max_order = 48;
};

/// One checked claim: an expected value and what the engine computes.
struct VerdictRow {
  std::string claim;
  std::string location;
  std::string expected;
  std::string computed;
  std::string status;  // match, mismatch, reinterpreted, inconclusive
  std::string note;
};

struct VerifyOptions {
  Caps caps;
  /// claim id -> replacement expected value; lets tests corrupt a constant.
  std::map<std::string, std::string> expected_overrides;
};

/// All rows, sorted by claim id.
std::vector<VerdictRow> verify_rows(const VerifyOptions& options = {});

// Each command writes its report to `out`, diagnostics to `err`, and returns
// an ExitCode.
int cmd_census(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_isoclinic(const std::string& a, const std::string& b, const CommandOptions& o, std::ostream& out,
                  std::ostream& err);
int cmd_bound(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_subgroup_scan(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const CommandOptions& o, std::ostream& out, std::ostream& err,
                     const std::map<std::string, std::string>& expected_overrides = {});
int cmd_conjecture_scan(const CommandOptions& o, std::ostream& out, std::ostream& err);

}  // namespace nacent

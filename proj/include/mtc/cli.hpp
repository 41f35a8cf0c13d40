#pragma once

// Command dispatch for the mfctl tool.
//
//   mfctl [--json] info <family>
//   mfctl [--json] dims <family> --surface "<literal>"
//   mfctl [--json] characters <family>
//   mfctl [--json] scaling <family> [--mode canonical|strict]
//   mfctl [--json] verify <family> | builtins
//   mfctl export <family>
//
// <family> is one of: su <N> <k> | lie <Type><rank> <k> | file <path> | trivial.
// Exit codes: 0 success, 1 failed check or unreadable data, 2 usage error.

#include "mtc/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mtc {

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct FamilyReport {
  std::string family;
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Families covered by `verify builtins`.
std::vector<FamilySpec> builtin_families();

/// Runs the invariant suite on one family; never throws.
FamilyReport verify_family(const FamilySpec& spec);

}  // namespace mtc

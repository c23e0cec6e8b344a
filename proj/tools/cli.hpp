#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "combi/family.hpp"

namespace combi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line or unreadable/invalid family file. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyInput {
  SetFamily family;
  Measure measure;
};

/// Parses {"universe": u, "sets": [[i, ...], ...], "weights": ["1", "1/2", ...]}.
/// Indices are 0-based and must be < u. "weights" is optional (all "1"); when
/// present it holds exactly u nonnegative integer or "p/q" strings.
/// Throws UsageError on any violation.
FamilyInput parse_family_json(std::string_view text);

/// Runs one invocation; `args` excludes the program name. Results go to
/// `out`, a one-line diagnostic to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combi::cli

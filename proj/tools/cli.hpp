#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyadj::cli {

struct Options {
  unsigned threads = 1;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kMalformed = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kNotStrict = 4;
inline constexpr int kDimensionMismatch = 5;
inline constexpr int kIncompleteFan = 6;

/// Runs one command line (without the program name). Output is written to
/// `out` only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

/// The bundled JSON schema, or the schema of one document type wrapped so
/// that it validates on its own. Empty string for an unknown name.
std::string schema(const std::string& name = "");

}  // namespace polyadj::cli

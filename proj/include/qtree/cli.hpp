#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "qtree/qpoly.hpp"

namespace qtree::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Environment variable that replaces the hard size caps.
inline constexpr const char* kBoundEnv = "QTREE_HARD_BOUND";

/// Coefficients as JSON numbers, or strings past the 53-bit safe range.
nlohmann::json coeffs_json(const QPoly& p);

/// Runs the CLI with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtree::cli

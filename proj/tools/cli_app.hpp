#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "riders/exactmath.hpp"
#include "riders/geometry.hpp"

namespace riders::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kMethodDisagreement = 3,
  kUnsupported = 4,
  kRegimeFailure = 5,
};

inline constexpr std::string_view kAlpha2Note =
    "alpha2 closed form: leading term is (3dmn^2 - cn^3)/(3d^2), not (3dmn^2 - cn^3)/d^2";
inline constexpr std::string_view kTwoPieceNote =
    "two-piece count: u(2) = (m^2 n^2 + (|M|-1)mn - sum of alpha2)/2, the (|M|-1)mn term enters with a plus sign";
inline constexpr std::string_view kPeriodOneNote =
    "q=1: u(1;n,n) = n^2 for every move, so the minimal period is 1";

// "c,d" with optional signs.
Move parse_move(std::string_view text);
// "c1,d1;c2,d2;..."
std::vector<Move> parse_moves(std::string_view text);
// "m,n"
BoardRect parse_board(std::string_view text);
// "a..b" or a single value "a".
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);
Integer parse_integer(std::string_view text);

/// Runs one command line. Output documents go to `out` (or --output), and
/// diagnostics to `err`. Returns an ExitCode value.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riders::cli

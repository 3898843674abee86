#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riders/counting.hpp"
#include "riders/oracle.hpp"

namespace riders {

struct SweepOptions {
  std::int64_t max_c = 3;
  std::int64_t max_d = 3;
  std::int64_t max_m = 6;
  std::int64_t max_n = 6;
  std::int64_t max_q = 6;
  OracleBudget oracle_budget;
  // Only moves with c <= d.
  bool ordered_moves_only = false;
  // Test fixture: adds one to every value this route reports, so the sweep
  // must fail.
  std::optional<Method> corrupt;
  bool parallel = true;
};

struct SweepReport {
  std::int64_t instances = 0;
  std::int64_t oracle_checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Coprime (c, d) with 0 <= c <= max_c, 0 <= d <= max_d, (c, d) != (0, 0).
std::vector<Move> basic_moves(std::int64_t max_c, std::int64_t max_d, bool ordered_only);

/// For every basic move, board and q in range: checks the closed line
/// multiset against the geometric one, that elementary, partition and
/// stirling agree, and that they match the brute-force oracle whenever
/// C(mn, q) is within budget. Failures are reported in sweep order.
SweepReport run_sweep(const SweepOptions& options);

}  // namespace riders

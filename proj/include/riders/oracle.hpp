#pragma once

#include <cstdint>

#include "riders/exactmath.hpp"
#include "riders/geometry.hpp"

// Brute-force enumeration of nonattacking placements. Shares nothing with the
// line-multiset code on purpose: it only knows cells and slopes.
namespace riders {

struct Cell {
  std::int64_t x = 1;  // 1..m
  std::int64_t y = 1;  // 1..n

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct OracleBudget {
  Integer max_configurations = 2'000'000;
};

/// True when b - a is a nonzero multiple of some move in the set, i.e.
/// d*dx == c*dy for that move's own (signed) slope.
bool attacks(const Cell& a, const Cell& b, const Moveset& moves);

/// Number of q-subsets of cells with no attacking pair. Parallel over the
/// first (lowest-index) cell of each subset with OpenMP.
/// Throws InputError when C(mn, q) exceeds the budget.
Integer brute_force_count(std::int64_t q, const Moveset& moves, const BoardRect& board,
                          const OracleBudget& budget = {});

/// Single-threaded reference for brute_force_count. Same enumeration, same
/// result.
Integer brute_force_count_serial(std::int64_t q, const Moveset& moves, const BoardRect& board,
                                 const OracleBudget& budget = {});

// C(mn, q) <= budget.
bool within_budget(std::int64_t q, const BoardRect& board, const OracleBudget& budget);

}  // namespace riders

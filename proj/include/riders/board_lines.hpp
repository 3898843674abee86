#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "riders/exactmath.hpp"
#include "riders/geometry.hpp"

namespace riders {

/// Reflects a basic move to (|c|, |d|). Lines of slope -d/c on a rectangle
/// are mirror images of lines of slope d/c, so every count is unchanged.
/// Throws InputError for (0,0) or when gcd(|c|,|d|) != 1.
Move canonicalize_move(std::int64_t c, std::int64_t d);

// A (move, board) pair laid out so that 0 < floor(n/d) <= floor(m/c), with
// floor(m/0) read as infinity. Axis moves always appear as (0,1).
//
// When the move does not fit on the board at all (c > m or d > n in both
// layouts) no layout satisfies the inequality; orient() then returns the input
// layout with move_fits = false, and every line has size one.
struct OrientedInstance {
  std::int64_t c = 0;
  std::int64_t d = 1;
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t s = 1;     // floor(n / d)
  std::int64_t nbar = 0;  // n - d*s
  bool swapped = false;
  bool move_fits = true;

  friend bool operator==(const OrientedInstance&, const OrientedInstance&) = default;
};

// Fills s and nbar for the given layout without checking the inequality.
OrientedInstance make_instance(std::int64_t c, std::int64_t d, std::int64_t m, std::int64_t n);

bool satisfies_line_hypothesis(const OrientedInstance& inst);

// Throws InputError pointing at orient() when `inst` cannot be used by the
// closed forms.
void require_line_hypothesis(const OrientedInstance& inst);

/// Swaps (c,d,m,n) -> (d,c,n,m) when needed. When both layouts qualify the
/// input layout is kept.
OrientedInstance orient(const Move& canonical_move, const BoardRect& board);

// Multiset of line sizes as size -> multiplicity. Zero multiplicities are
// never stored and equal sizes are merged.
class LineMultiset {
 public:
  LineMultiset() = default;

  void add(std::int64_t size, std::int64_t multiplicity);

  const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }

  // Number of lines |L|.
  std::int64_t line_count() const;
  // Sum of size * multiplicity: the number of cells covered.
  Integer cell_count() const;

  friend bool operator==(const LineMultiset&, const LineMultiset&) = default;

 private:
  std::map<std::int64_t, std::int64_t> entries_;
};

std::string to_string(const LineMultiset& lines);

// The three line-size buckets of a rectangle: sizes 1..s-1 each occurring
// `small_mult` times, size s occurring `main_mult` times and size s+1
// occurring `upper_mult` times.
struct LineBuckets {
  std::int64_t s = 1;
  std::int64_t small_mult = 0;
  std::int64_t main_mult = 0;
  std::int64_t upper_mult = 0;
};

LineBuckets line_buckets(const OrientedInstance& inst);

/// Line multiset from the closed-form bucket multiplicities:
///   1 <= l < s : 2cd
///   l = s      : (d - nbar)(m - cs) + c(nbar + d)
///   l = s + 1  : nbar (m - cs)
LineMultiset line_multiset_closed(const OrientedInstance& inst);

/// Line multiset by walking the board: every unvisited cell is extended in
/// both directions by steps of (c,d) and the component sizes are collected.
LineMultiset line_multiset_geometric(const Move& canonical_move, const BoardRect& board);

}  // namespace riders

#include "riders/board_lines.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <vector>

#include "riders/error.hpp"

namespace riders {

Move canonicalize_move(std::int64_t c, std::int64_t d) {
  if (c == 0 && d == 0) throw InputError("move must be nonzero");
  if (std::gcd(c, d) != 1) {
    throw InputError("move must be a basic move: " + to_string(Move{c, d}) + " is not coprime");
  }
  return {std::llabs(c), std::llabs(d)};
}

OrientedInstance make_instance(std::int64_t c, std::int64_t d, std::int64_t m, std::int64_t n) {
  OrientedInstance inst;
  inst.c = c;
  inst.d = d;
  inst.m = m;
  inst.n = n;
  inst.s = d > 0 ? n / d : 0;
  inst.nbar = n - d * inst.s;
  return inst;
}

bool satisfies_line_hypothesis(const OrientedInstance& inst) {
  if (!inst.move_fits) return true;
  if (inst.c < 0 || inst.d < 1 || inst.m < 1 || inst.n < 1) return false;
  if (inst.s != inst.n / inst.d || inst.nbar != inst.n - inst.d * inst.s) return false;
  if (inst.s < 1) return false;
  return inst.c == 0 || inst.s <= inst.m / inst.c;
}

void require_line_hypothesis(const OrientedInstance& inst) {
  if (!satisfies_line_hypothesis(inst)) {
    throw InputError("instance (c,d,m,n)=(" + std::to_string(inst.c) + "," + std::to_string(inst.d) +
                     "," + std::to_string(inst.m) + "," + std::to_string(inst.n) +
                     ") violates 0 < floor(n/d) <= floor(m/c); call orient() first");
  }
}

OrientedInstance orient(const Move& move, const BoardRect& board) {
  validate_board(board);
  if (move.c < 0 || move.d < 0 || (move.c == 0 && move.d == 0) || std::gcd(move.c, move.d) != 1) {
    throw InputError("orient expects a canonical basic move, got " + to_string(move));
  }
  if (move.d == 0) {
    // (1,0): the rows play the role of columns.
    auto inst = make_instance(0, 1, board.n, board.m);
    inst.swapped = true;
    return inst;
  }
  auto as_given = make_instance(move.c, move.d, board.m, board.n);
  if (satisfies_line_hypothesis(as_given)) return as_given;
  auto flipped = make_instance(move.d, move.c, board.n, board.m);
  flipped.swapped = true;
  if (satisfies_line_hypothesis(flipped)) return flipped;
  as_given.move_fits = false;
  return as_given;
}

void LineMultiset::add(std::int64_t size, std::int64_t multiplicity) {
  if (size < 1) throw InputError("line size must be positive");
  if (multiplicity < 0) throw InputError("line multiplicity must be nonnegative");
  if (multiplicity == 0) return;
  entries_[size] += multiplicity;
}

std::int64_t LineMultiset::line_count() const {
  std::int64_t total = 0;
  for (const auto& [size, mult] : entries_) total += mult;
  return total;
}

Integer LineMultiset::cell_count() const {
  Integer total = 0;
  for (const auto& [size, mult] : entries_) total += Integer(size) * Integer(mult);
  return total;
}

std::string to_string(const LineMultiset& lines) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [size, mult] : lines.entries()) {
    out << (first ? "" : ", ") << size << ":" << mult;
    first = false;
  }
  out << "}";
  return out.str();
}

LineBuckets line_buckets(const OrientedInstance& inst) {
  require_line_hypothesis(inst);
  if (!inst.move_fits) return {1, 0, inst.m * inst.n, 0};
  const std::int64_t c = inst.c, d = inst.d, m = inst.m, s = inst.s, nbar = inst.nbar;
  LineBuckets b;
  b.s = s;
  b.small_mult = 2 * c * d;
  b.main_mult = (d - nbar) * (m - c * s) + c * (nbar + d);
  b.upper_mult = nbar * (m - c * s);
  if (b.main_mult < 0 || b.upper_mult < 0) {
    throw InternalError("negative line multiplicity for a valid oriented instance");
  }
  return b;
}

LineMultiset line_multiset_closed(const OrientedInstance& inst) {
  const LineBuckets b = line_buckets(inst);
  LineMultiset lines;
  for (std::int64_t size = 1; size < b.s; ++size) lines.add(size, b.small_mult);
  lines.add(b.s, b.main_mult);
  lines.add(b.s + 1, b.upper_mult);
  return lines;
}

LineMultiset line_multiset_geometric(const Move& move, const BoardRect& board) {
  validate_board(board);
  if (move.c == 0 && move.d == 0) throw InputError("move must be nonzero");
  const auto m = board.m;
  const auto n = board.n;
  auto on_board = [&](std::int64_t x, std::int64_t y) { return x >= 1 && x <= m && y >= 1 && y <= n; };
  std::vector<char> visited(static_cast<std::size_t>(m * n), 0);
  auto index = [&](std::int64_t x, std::int64_t y) { return static_cast<std::size_t>((x - 1) * n + (y - 1)); };

  LineMultiset lines;
  for (std::int64_t x = 1; x <= m; ++x) {
    for (std::int64_t y = 1; y <= n; ++y) {
      if (visited[index(x, y)]) continue;
      std::int64_t sx = x;
      std::int64_t sy = y;
      while (on_board(sx - move.c, sy - move.d)) {
        sx -= move.c;
        sy -= move.d;
      }
      std::int64_t size = 0;
      for (; on_board(sx, sy); sx += move.c, sy += move.d) {
        visited[index(sx, sy)] = 1;
        ++size;
      }
      lines.add(size, 1);
    }
  }
  return lines;
}

}  // namespace riders

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riders {

// A basic rider move (c, d): c is the step along the board's first dimension
// m, d the step along the second dimension n. Signed until canonicalized.
struct Move {
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

struct BoardRect {
  std::int64_t m = 1;
  std::int64_t n = 1;

  friend bool operator==(const BoardRect&, const BoardRect&) = default;
};

std::string to_string(const Move& move);
std::string to_string(const BoardRect& board);

// Throws InputError unless m >= 1 and n >= 1.
void validate_board(const BoardRect& board);

// Moves of a rider, one per slope. Each move is stored with its sign
// normalized so that c > 0, or c == 0 and d == 1; the sign of d is kept,
// so (1,1) and (1,-1) are different slopes.
class Moveset {
 public:
  // Throws InputError on an empty list, a zero or non-coprime move, or two
  // moves with the same slope.
  explicit Moveset(const std::vector<Move>& moves);

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }

 private:
  std::vector<Move> moves_;
};

}  // namespace riders

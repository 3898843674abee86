#include "riders/geometry.hpp"

#include <numeric>

#include "riders/error.hpp"

namespace riders {

std::string to_string(const Move& move) {
  return "(" + std::to_string(move.c) + "," + std::to_string(move.d) + ")";
}

std::string to_string(const BoardRect& board) {
  return std::to_string(board.m) + "x" + std::to_string(board.n);
}

void validate_board(const BoardRect& board) {
  if (board.m < 1 || board.n < 1) {
    throw InputError("board dimensions must be positive, got " + to_string(board));
  }
}

Moveset::Moveset(const std::vector<Move>& moves) {
  if (moves.empty()) throw InputError("moveset must contain at least one move");
  for (Move move : moves) {
    if (move.c == 0 && move.d == 0) throw InputError("move must be nonzero");
    if (std::gcd(move.c, move.d) != 1) {
      throw InputError("move must be a basic move: " + to_string(move) + " is not coprime");
    }
    if (move.c < 0 || (move.c == 0 && move.d < 0)) move = {-move.c, -move.d};
    for (const auto& existing : moves_) {
      if (existing == move) throw InputError("moveset repeats the slope of " + to_string(move));
    }
    moves_.push_back(move);
  }
}

}  // namespace riders

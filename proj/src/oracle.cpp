#include "riders/oracle.hpp"

#include <cstdint>
#include <vector>

#include "riders/error.hpp"

namespace riders {
namespace {

using CellIndex = std::int32_t;

struct Search {
  std::vector<Cell> cells;
  const Moveset* moves = nullptr;

  // Subsets of `candidates` of size `remaining`, all pairwise nonattacking.
  // Candidates are already known not to attack anything chosen so far.
  std::uint64_t count_from(const std::vector<CellIndex>& candidates, std::int64_t remaining) const {
    if (remaining == 0) return 1;
    if (remaining == 1) return candidates.size();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (static_cast<std::int64_t>(candidates.size() - i) < remaining) break;
      total += extend(candidates, i, remaining);
    }
    return total;
  }

  // Fixes candidates[i] as the lowest chosen cell and counts completions.
  std::uint64_t extend(const std::vector<CellIndex>& candidates, std::size_t i,
                       std::int64_t remaining) const {
    const Cell& chosen = cells[static_cast<std::size_t>(candidates[i])];
    std::vector<CellIndex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!attacks(chosen, cells[static_cast<std::size_t>(candidates[j])], *moves)) {
        next.push_back(candidates[j]);
      }
    }
    return count_from(next, remaining - 1);
  }
};

Search make_search(const Moveset& moves, const BoardRect& board) {
  validate_board(board);
  Search search;
  search.moves = &moves;
  search.cells.reserve(static_cast<std::size_t>(board.m * board.n));
  for (std::int64_t x = 1; x <= board.m; ++x) {
    for (std::int64_t y = 1; y <= board.n; ++y) search.cells.push_back({x, y});
  }
  return search;
}

void check_budget(std::int64_t q, const BoardRect& board, const OracleBudget& budget) {
  if (q < 0) throw InputError("number of pieces must be nonnegative");
  if (budget.max_configurations <= 0) throw InputError("oracle budget must be positive");
  const Integer subsets = binomial(board.m * board.n, q);
  if (subsets > budget.max_configurations) {
    throw InputError("oracle budget exceeded: C(" + std::to_string(board.m * board.n) + "," +
                     std::to_string(q) + ") = " + to_string(subsets) + " > " +
                     to_string(budget.max_configurations));
  }
}

Integer to_integer(std::uint64_t value) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

std::vector<CellIndex> all_indices(const Search& search) {
  std::vector<CellIndex> out(search.cells.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<CellIndex>(i);
  return out;
}

}  // namespace

bool attacks(const Cell& a, const Cell& b, const Moveset& moves) {
  if (a == b) return false;
  const std::int64_t dx = b.x - a.x;
  const std::int64_t dy = b.y - a.y;
  for (const Move& move : moves.moves()) {
    if (move.d * dx == move.c * dy) return true;
  }
  return false;
}

bool within_budget(std::int64_t q, const BoardRect& board, const OracleBudget& budget) {
  return q >= 0 && binomial(board.m * board.n, q) <= budget.max_configurations;
}

Integer brute_force_count_serial(std::int64_t q, const Moveset& moves, const BoardRect& board,
                                 const OracleBudget& budget) {
  check_budget(q, board, budget);
  const Search search = make_search(moves, board);
  const auto indices = all_indices(search);
  std::uint64_t total = 0;
  if (q <= 1) {
    total = search.count_from(indices, q);
  } else {
    for (std::size_t i = 0; i < indices.size(); ++i) total += search.extend(indices, i, q);
  }
  return to_integer(total);
}

Integer brute_force_count(std::int64_t q, const Moveset& moves, const BoardRect& board,
                          const OracleBudget& budget) {
  check_budget(q, board, budget);
  const Search search = make_search(moves, board);
  const auto indices = all_indices(search);
  std::uint64_t total = 0;
  if (q <= 1) {
    total = search.count_from(indices, q);
  } else {
    const auto count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t i = 0; i < count; ++i) {
      total += search.extend(indices, static_cast<std::size_t>(i), q);
    }
  }
  return to_integer(total);
}

}  // namespace riders

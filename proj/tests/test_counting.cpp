#include <doctest.h>

#include "riders/counting.hpp"
#include "riders/error.hpp"
#include "riders/verify.hpp"
#include "test_oracles.hpp"

using namespace riders;

namespace {

LineMultiset diag3() { return line_multiset_geometric({1, 1}, {3, 3}); }

std::vector<std::int64_t> flatten(const LineMultiset& lines) {
  std::vector<std::int64_t> out;
  for (const auto& [size, mult] : lines.entries()) out.insert(out.end(), static_cast<std::size_t>(mult), size);
  return out;
}

}  // namespace

TEST_CASE("count_elementary examples") {
  CHECK(count_elementary(2, diag3()) == 31);
  CHECK(count_elementary(3, diag3()) == 51);
  CHECK(count_elementary(5, diag3()) == 12);
  CHECK(count_elementary(6, diag3()) == 0);
  CHECK(count_elementary(0, diag3()) == 1);
  CHECK(count_elementary(0, LineMultiset{}) == 1);
  CHECK_THROWS_AS(count_elementary(-1, diag3()), InputError);
}

TEST_CASE("count_elementary equals e_q by subset enumeration") {
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        const auto lines = line_multiset_geometric(move, {m, n});
        const auto sizes = flatten(lines);
        for (int q = 0; q <= 5; ++q) CHECK(count_elementary(q, lines) == testing::elementary_symmetric(sizes, q));
      }
    }
  }
}

TEST_CASE("count_partition examples") {
  CHECK(count_partition(2, diag3()) == 31);
  CHECK(count_partition(3, diag3()) == 51);
  CHECK(count_partition(0, diag3()) == 1);
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) CHECK(count_partition(1, line_multiset_geometric({1, 2}, {m, n})) == m * n);
  }
}

TEST_CASE("count_stirling examples") {
  CHECK(count_stirling(2, make_instance(1, 1, 3, 3)) == 31);
  CHECK(count_stirling(2, make_instance(1, 2, 4, 5)) == 179);
  CHECK(count_elementary(2, line_multiset_closed(make_instance(1, 2, 4, 5))) == 179);
  CHECK(count_stirling(0, make_instance(1, 2, 4, 5)) == 1);
  CHECK_THROWS_AS(count_stirling(2, make_instance(1, 1, 2, 5)), InputError);
}

TEST_CASE("the three one-move routes agree") {
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        const auto inst = orient(move, {m, n});
        const auto lines = line_multiset_closed(inst);
        for (std::int64_t q = 0; q <= 6; ++q) {
          const Integer expected = count_elementary(q, lines);
          CHECK(count_partition(q, lines) == expected);
          CHECK(count_stirling(q, inst) == expected);
        }
      }
    }
  }
}

TEST_CASE("boundary behavior") {
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        const auto lines = line_multiset_geometric(move, {m, n});
        const std::int64_t count = lines.line_count();
        CHECK(count_elementary(0, lines) == 1);
        CHECK(count_elementary(1, lines) == m * n);
        CHECK(count_elementary(count + 1, lines) == 0);
        Integer product = 1;
        for (const auto& [size, mult] : lines.entries()) product *= power(Integer(size), mult);
        CHECK(count_elementary(count, lines) == product);
      }
    }
  }
}

TEST_CASE("transpose invariance") {
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t q = 0; q <= 4; ++q) {
          CHECK(count(q, move, {m, n}, MethodChoice::automatic).value ==
                count(q, {move.d, move.c}, {n, m}, MethodChoice::automatic).value);
        }
      }
    }
  }
}

TEST_CASE("count_two_pieces") {
  CHECK(count_two_pieces(Moveset({{1, 1}}), {3, 3}) == 31);
  CHECK(count_two_pieces(Moveset({{1, 1}, {1, -1}}), {3, 3}) == 26);
  CHECK(count_two_pieces(Moveset({{0, 1}}), {2, 2}) == 4);
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        CHECK(count_two_pieces(Moveset({move}), {m, n}) == count(2, move, {m, n}, MethodChoice::automatic).value);
      }
    }
  }
}

TEST_CASE("count_two_pieces matches brute force for multi-move sets") {
  const std::vector<std::vector<Move>> sets{
      {{1, 1}, {1, -1}},                  // bishop
      {{1, 0}, {0, 1}},                   // rook
      {{1, 0}, {0, 1}, {1, 1}, {1, -1}},  // queen
      {{1, 2}, {2, 1}, {1, -2}, {2, -1}}, // nightrider
      {{1, 3}, {0, 1}},
  };
  for (const auto& moves : sets) {
    const Moveset set(moves);
    for (std::int64_t m = 1; m <= 7; ++m) {
      for (std::int64_t n = 1; n <= 7; ++n) CHECK(count_two_pieces(set, {m, n}) == brute_force_count(2, set, {m, n}));
    }
  }
}

TEST_CASE("count_semirook") {
  CHECK(count_semirook(2, 3, 3) == 27);
  CHECK(count_semirook(4, 3, 5) == 0);
  CHECK(count_semirook(1, 4, 6) == 24);
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t q = 0; q <= 6; ++q) {
        CHECK(count_semirook(q, m, n) == count(q, {0, 1}, {m, n}, MethodChoice::automatic).value);
      }
    }
  }
}

TEST_CASE("count_semibishop") {
  CHECK(count_semibishop(2, 3, 3) == 31);
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t m = n; m <= 8; ++m) {
      CHECK(count_semibishop(0, m, n) == 1);
      for (std::int64_t q = 0; q <= 8; ++q) {
        CHECK(count_semibishop(q, m, n) == count(q, {1, 1}, {m, n}, MethodChoice::automatic).value);
      }
    }
  }
  CHECK(count_semibishop(2, 4, 3) == brute_force_count(2, Moveset({{1, 1}}), {4, 3}));
  CHECK_THROWS_WITH_AS(count_semibishop(2, 3, 4), doctest::Contains("transpose"), InputError);
}

TEST_CASE("count dispatch") {
  const auto all = count(2, {1, 1}, {3, 3}, MethodChoice::all);
  CHECK(all.value == 31);
  const auto results = count_all(2, {1, 1}, {3, 3});
  // elementary, partition, stirling, two_piece, semibishop, oracle
  CHECK(results.size() == 6);
  for (const auto& r : results) CHECK(r.value == 31);

  CHECK(count(7, {1, 1}, {3, 3}, MethodChoice::automatic).value == 0);
  CHECK(count(1, {1, 2}, {9, 9}, MethodChoice::all).value == 81);
  CHECK(count(3, {-1, 2}, {4, 5}, MethodChoice::all).value == count(3, {1, 2}, {4, 5}, MethodChoice::oracle).value);
  CHECK(count(2, {1, 2}, {3, 3}, MethodChoice::stirling).method == Method::stirling);
  CHECK_THROWS_AS(count(2, {2, 4}, {3, 3}, MethodChoice::automatic), InputError);
}

TEST_CASE("method names round-trip") {
  for (auto choice : {MethodChoice::automatic, MethodChoice::elementary, MethodChoice::partition,
                      MethodChoice::stirling, MethodChoice::oracle, MethodChoice::all}) {
    CHECK(parse_method_choice(to_string(choice)) == choice);
  }
  CHECK_THROWS_AS(parse_method_choice("fast"), InputError);
}

TEST_CASE("disagreement report names every method") {
  const MethodDisagreement error("q=2", {{31, Method::elementary}, {32, Method::partition}});
  const std::string text = error.what();
  CHECK(text.find("elementary=31") != std::string::npos);
  CHECK(text.find("partition=32") != std::string::npos);
}

TEST_CASE("large counts stay exact") {
  // C(100,50) * 100^50
  const Integer expected = binomial(100, 50) * power(Integer(100), 50);
  CHECK(count(50, {0, 1}, {100, 100}, MethodChoice::automatic).value == expected);
  CHECK(count(50, {0, 1}, {100, 100}, MethodChoice::stirling).value == expected);
  CHECK(count(12, {1, 1}, {30, 30}, MethodChoice::partition).value ==
        count(12, {1, 1}, {30, 30}, MethodChoice::elementary).value);
}

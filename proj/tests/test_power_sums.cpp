#include <doctest.h>

#include "riders/board_lines.hpp"
#include "riders/error.hpp"
#include "riders/power_sums.hpp"
#include "riders/verify.hpp"

using namespace riders;

TEST_CASE("alpha_general examples") {
  const auto diag = line_multiset_geometric({1, 1}, {3, 3});
  CHECK(alpha_general(2, diag) == 19);
  CHECK(alpha_general(3, diag) == 45);
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) CHECK(alpha_general(1, line_multiset_geometric({1, 2}, {m, n})) == m * n);
  }
  CHECK_THROWS_AS(alpha_general(0, diag), InputError);
}

TEST_CASE("alpha closed forms on pinned instances") {
  CHECK(alpha2_closed(make_instance(1, 1, 3, 3)) == 19);
  CHECK(alpha3_closed(make_instance(1, 1, 3, 3)) == 45);
  CHECK(alpha2_closed(make_instance(1, 2, 4, 5)) == 42);
  CHECK(alpha3_closed(make_instance(1, 2, 4, 5)) == 98);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      CHECK(alpha2_closed(make_instance(0, 1, m, n)) == m * n * n);
      CHECK(alpha3_closed(make_instance(0, 1, m, n)) == m * n * n * n);
    }
  }
}

TEST_CASE("alpha closed forms reject unoriented instances") {
  CHECK_THROWS_AS(alpha2_closed(make_instance(1, 1, 2, 5)), InputError);
  CHECK_THROWS_AS(alpha3_closed(make_instance(1, 2, 4, 1)), InputError);
}

TEST_CASE("alpha closed forms agree with the definition") {
  for (const Move& move : basic_moves(4, 4, false)) {
    for (std::int64_t m = 1; m <= 10; ++m) {
      for (std::int64_t n = 1; n <= 10; ++n) {
        const auto inst = orient(move, {m, n});
        const auto lines = line_multiset_geometric(move, {m, n});
        CAPTURE(move.c);
        CAPTURE(move.d);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(alpha2_closed(inst) == alpha_general(2, lines));
        CHECK(alpha3_closed(inst) == alpha_general(3, lines));
      }
    }
  }
}

TEST_CASE("alpha grows with p and is bounded below by mn") {
  for (const Move& move : basic_moves(3, 3, false)) {
    for (std::int64_t m = 1; m <= 7; ++m) {
      for (std::int64_t n = 1; n <= 7; ++n) {
        const auto lines = line_multiset_geometric(move, {m, n});
        const bool has_long_line = lines.entries().rbegin()->first >= 2;
        for (std::int64_t p = 1; p < 5; ++p) {
          if (has_long_line) {
            CHECK(alpha_general(p + 1, lines) > alpha_general(p, lines));
          } else {
            CHECK(alpha_general(p + 1, lines) == alpha_general(p, lines));
          }
          CHECK(alpha_general(p, lines) >= m * n);
        }
        CHECK((alpha_general(2, lines) == m * n) == !has_long_line);
      }
    }
  }
}

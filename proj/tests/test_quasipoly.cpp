#include <doctest.h>

#include "riders/counting.hpp"
#include "riders/error.hpp"
#include "riders/quasipoly.hpp"

using namespace riders;

TEST_CASE("square board samples for (1,2)") {
  CHECK(square_board_count({1, 2}, 2, 2) == 6);
  CHECK(square_board_count({1, 2}, 2, 3) == 34);
  CHECK(square_board_count({1, 2}, 2, 4) == 114);
  CHECK(square_board_count({1, 2}, 2, 6) == 602);
}

TEST_CASE("fit for (1,2), q = 2") {
  const auto qp = fit_square_board({1, 2}, 2);
  CHECK(qp.period == 2);
  CHECK(qp.degree == 4);
  CHECK(qp.valid_from == 6);
  // even n: n^4/2 - 5n^3/24 - n/6
  CHECK(qp.constituents[0] == RatPolynomial({0, Rational(-1, 6), 0, Rational(-5, 24), Rational(1, 2)}));
  // odd n: n^4/2 - 5n^3/24 - 7n/24
  CHECK(qp.constituents[1] == RatPolynomial({0, Rational(-7, 24), 0, Rational(-5, 24), Rational(1, 2)}));
  CHECK(minimal_period(qp) == 2);
  CHECK(evaluate(qp, 8) == square_board_count({1, 2}, 2, 8));
  CHECK(evaluate(qp, 8) == 1940);
  // The polynomial regime already holds from n = d.
  const auto early = fit_square_board({1, 2}, 2, {.valid_from = 2});
  CHECK(early.constituents == qp.constituents);
  CHECK(evaluate(early, 2) == 6);
  CHECK(evaluate(early, 3) == 34);
  CHECK(evaluate(early, 4) == 114);
}

TEST_CASE("fit for the semirook is C(n,2) n^2") {
  const auto qp = fit_square_board({0, 1}, 2);
  CHECK(qp.period == 1);
  // n^2 (n^2 - n) / 2
  CHECK(qp.constituents[0] == RatPolynomial({0, 0, 0, Rational(-1, 2), Rational(1, 2)}));
  CHECK(evaluate(qp, 5) == 250);
  CHECK(minimal_period(fit_square_board({0, 1}, 3)) == 1);
}

TEST_CASE("minimal periods") {
  CHECK(minimal_period(fit_square_board({1, 1}, 3)) == 1);
  CHECK(minimal_period(fit_square_board({1, 2}, 1)) == 1);
  CHECK(minimal_period(fit_square_board({2, 1}, 3)) == 2);
  CHECK(minimal_period(fit_square_board({1, 3}, 2)) == 3);
}

TEST_CASE("constituent degree is 2q with leading coefficient 1/q!") {
  for (const Move move : {Move{0, 1}, Move{1, 1}, Move{1, 2}, Move{1, 3}, Move{2, 3}}) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      const auto qp = fit_square_board(move, q);
      for (const auto& constituent : qp.constituents) {
        CHECK(constituent.degree() == 2 * q);
        CHECK(constituent.coefficient(2 * q) == Rational(1) / Rational(factorial(q)));
      }
    }
  }
}

TEST_CASE("regime errors") {
  // 2^n is not a polynomial in any residue class.
  CHECK_THROWS_WITH_AS(fit_quasipolynomial([](std::int64_t n) { return power(Integer(2), n); }, 2, 3, 1),
                       doctest::Contains("raise valid_from"), RegimeError);
  // |n - 5| is linear only from n = 5 on.
  const Sampler kink = [](std::int64_t n) { return Integer(n > 5 ? n - 5 : 5 - n); };
  CHECK_THROWS_AS(fit_quasipolynomial(kink, 1, 1, 4), RegimeError);
  CHECK(evaluate(fit_quasipolynomial(kink, 1, 1, 5), 40) == 35);
  const auto qp = fit_square_board({1, 2}, 2);
  CHECK_THROWS_AS(evaluate(qp, 5), RegimeError);
  CHECK_THROWS_AS(fit_square_board({1, 2}, 0), InputError);
}

TEST_CASE("square-board fits hold from small n") {
  // Observed: for these moves the fit is already exact from n = 1.
  for (const Move move : {Move{1, 2}, Move{1, 3}, Move{2, 3}}) {
    const auto from_one = fit_square_board(move, 2, {.valid_from = 1});
    CHECK(from_one.constituents == fit_square_board(move, 2).constituents);
  }
}

TEST_CASE("sample abscissas") {
  CHECK(sample_abscissas(3, 2, 7, 0) == std::vector<std::int64_t>{9, 12, 15, 18});
  CHECK(sample_abscissas(3, 2, 7, 1) == std::vector<std::int64_t>{7, 10, 13, 16});
  CHECK(sample_abscissas(1, 1, 4, 0) == std::vector<std::int64_t>{4, 5, 6});
}

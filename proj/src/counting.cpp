#include "riders/counting.hpp"

#include <sstream>

#include "riders/power_sums.hpp"

namespace riders {
namespace {

void require_pieces(std::int64_t q) {
  if (q < 0) throw InputError("number of pieces must be nonnegative");
}

// Coefficient vector of (x + root)^exponent built from binomials:
// the coefficient of x^(exponent - j) is C(exponent, j) root^j.
IntPolynomial binomial_factor(std::int64_t root, std::int64_t exponent) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(exponent + 1));
  Integer root_power = 1;
  for (std::int64_t j = 0; j <= exponent; ++j) {
    coeffs[static_cast<std::size_t>(exponent - j)] = binomial(exponent, j) * root_power;
    root_power *= root;
  }
  return IntPolynomial(std::move(coeffs));
}

// sum_j c(s, j+1) x^j, i.e. (x+1)...(x+s-1) read off the Stirling table.
IntPolynomial stirling_factor(std::int64_t s) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(s));
  for (std::int64_t j = 0; j < s; ++j) coeffs[static_cast<std::size_t>(j)] = stirling_first_unsigned(s, j + 1);
  return IntPolynomial(std::move(coeffs));
}

std::string describe_query(std::int64_t q, const Move& move, const BoardRect& board) {
  return "q=" + std::to_string(q) + " move=" + to_string(move) + " board=" + to_string(board);
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::elementary: return "elementary";
    case Method::partition: return "partition";
    case Method::stirling: return "stirling";
    case Method::two_piece: return "two_piece";
    case Method::semirook: return "semirook";
    case Method::semibishop: return "semibishop";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(MethodChoice choice) {
  switch (choice) {
    case MethodChoice::automatic: return "auto";
    case MethodChoice::elementary: return "elementary";
    case MethodChoice::partition: return "partition";
    case MethodChoice::stirling: return "stirling";
    case MethodChoice::oracle: return "oracle";
    case MethodChoice::all: return "all";
  }
  return "unknown";
}

MethodChoice parse_method_choice(std::string_view name) {
  for (auto choice : {MethodChoice::automatic, MethodChoice::elementary, MethodChoice::partition,
                      MethodChoice::stirling, MethodChoice::oracle, MethodChoice::all}) {
    if (name == to_string(choice)) return choice;
  }
  throw InputError("unknown method '" + std::string(name) +
                   "' (expected auto, elementary, partition, stirling, oracle or all)");
}

Integer count_elementary(std::int64_t q, const LineMultiset& lines) {
  require_pieces(q);
  const std::int64_t line_count = lines.line_count();
  if (q > line_count) return 0;
  auto product = IntPolynomial::constant(1);
  for (const auto& [size, mult] : lines.entries()) {
    product = poly_mul(product, poly_pow(IntPolynomial::shifted_x(Integer(size)), mult));
  }
  return product.coefficient(line_count - q);
}

Integer count_partition(std::int64_t q, const LineMultiset& lines) {
  require_pieces(q);
  // alpha(p) for every part size that can occur.
  std::vector<Integer> alphas(static_cast<std::size_t>(q + 1));
  for (std::int64_t p = 1; p <= q; ++p) alphas[static_cast<std::size_t>(p)] = alpha_general(p, lines);

  Rational total = 0;
  for (const auto& partition : partitions_of(q)) {
    Rational term = 1;
    for (const auto& [part, mult] : partition.parts) {
      term *= Rational(power(alphas[static_cast<std::size_t>(part)], mult),
                       power(Integer(part), mult) * factorial(mult));
    }
    term.canonicalize();
    if ((q - partition.length()) % 2 != 0) term = -term;
    total += term;
  }
  Integer value = require_integral(total, "count_partition");
  if (value < 0) throw InternalError("count_partition produced negative value " + to_string(value));
  return value;
}

Integer count_stirling(std::int64_t q, const OrientedInstance& inst) {
  require_pieces(q);
  const LineBuckets b = line_buckets(inst);
  const std::int64_t line_count = b.small_mult * (b.s - 1) + b.main_mult + b.upper_mult;
  if (q > line_count) return 0;
  IntPolynomial product = binomial_factor(b.s, b.main_mult) * binomial_factor(b.s + 1, b.upper_mult);
  if (b.small_mult > 0) product = product * poly_pow(stirling_factor(b.s), b.small_mult);
  return product.coefficient(line_count - q);
}

Integer count_two_pieces(const Moveset& moves, const BoardRect& board) {
  validate_board(board);
  const Integer cells = Integer(board.m) * Integer(board.n);
  Integer twice = cells * cells + Integer(static_cast<long>(moves.size()) - 1) * cells;
  for (const Move& move : moves.moves()) {
    twice -= alpha2_closed(orient(canonicalize_move(move.c, move.d), board));
  }
  if (twice < 0 || twice % 2 != 0) {
    throw InternalError("count_two_pieces produced invalid doubled count " + to_string(twice));
  }
  return twice / 2;
}

Integer count_semirook(std::int64_t q, std::int64_t m, std::int64_t n) {
  require_pieces(q);
  validate_board({m, n});
  return binomial(m, q) * power(Integer(n), q);
}

Integer count_semibishop(std::int64_t q, std::int64_t m, std::int64_t n) {
  require_pieces(q);
  validate_board({m, n});
  if (m < n) {
    throw InputError("count_semibishop requires m >= n; transpose the board (" + std::to_string(m) +
                     "x" + std::to_string(n) + " -> " + std::to_string(n) + "x" + std::to_string(m) + ")");
  }
  const std::int64_t full_lines = m - n + 1;
  Integer total = 0;
  for (std::int64_t l = 0; l <= full_lines; ++l) {
    const std::int64_t other = m + n - q - l + 1;  // second Stirling index is other - j
    Integer inner = 0;
    for (std::int64_t j = std::max<std::int64_t>(1, other - n); j <= std::min(n, other - 1); ++j) {
      inner += stirling_first_unsigned(n, j) * stirling_first_unsigned(n, other - j);
    }
    if (inner == 0) continue;
    total += power(Integer(n), full_lines - l) * binomial(full_lines, l) * inner;
  }
  return total;
}

MethodDisagreement::MethodDisagreement(std::string query, std::vector<CountResult> results)
    : Error([&] {
        std::ostringstream out;
        out << "counting methods disagree for " << query << ":";
        for (const auto& r : results) out << " " << to_string(r.method) << "=" << to_string(r.value);
        return out.str();
      }()),
      query_(std::move(query)),
      results_(std::move(results)) {}

std::vector<CountResult> count_all(std::int64_t q, const Move& move, const BoardRect& board,
                                   const OracleBudget& budget) {
  require_pieces(q);
  const Move canonical = canonicalize_move(move.c, move.d);
  const OrientedInstance inst = orient(canonical, board);
  const LineMultiset lines = line_multiset_closed(inst);

  std::vector<CountResult> results;
  results.push_back({count_elementary(q, lines), Method::elementary});
  results.push_back({count_partition(q, lines), Method::partition});
  results.push_back({count_stirling(q, inst), Method::stirling});
  if (q == 2) results.push_back({count_two_pieces(Moveset({move}), board), Method::two_piece});
  if (canonical.c == 0 || canonical.d == 0) {
    // inst is (0,1) on the oriented board: inst.m lines of size inst.n.
    results.push_back({count_semirook(q, inst.m, inst.n), Method::semirook});
  }
  if (canonical == Move{1, 1}) {
    results.push_back({count_semibishop(q, std::max(board.m, board.n), std::min(board.m, board.n)),
                       Method::semibishop});
  }
  if (within_budget(q, board, budget)) {
    results.push_back({brute_force_count(q, Moveset({move}), board, budget), Method::oracle});
  }
  return results;
}

CountResult count(std::int64_t q, const Move& move, const BoardRect& board, MethodChoice method,
                  const OracleBudget& budget) {
  require_pieces(q);
  const Move canonical = canonicalize_move(move.c, move.d);
  switch (method) {
    case MethodChoice::automatic:
    case MethodChoice::elementary:
      return {count_elementary(q, line_multiset_closed(orient(canonical, board))), Method::elementary};
    case MethodChoice::partition:
      return {count_partition(q, line_multiset_closed(orient(canonical, board))), Method::partition};
    case MethodChoice::stirling:
      return {count_stirling(q, orient(canonical, board)), Method::stirling};
    case MethodChoice::oracle:
      return {brute_force_count(q, Moveset({move}), board, budget), Method::oracle};
    case MethodChoice::all: {
      auto results = count_all(q, move, board, budget);
      for (const auto& r : results) {
        if (r.value != results.front().value) {
          throw MethodDisagreement(describe_query(q, move, board), std::move(results));
        }
      }
      return results.front();
    }
  }
  throw InputError("unknown method");
}

}  // namespace riders

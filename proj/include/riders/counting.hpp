#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "riders/board_lines.hpp"
#include "riders/error.hpp"
#include "riders/exactmath.hpp"
#include "riders/geometry.hpp"
#include "riders/oracle.hpp"

namespace riders {

enum class Method { elementary, partition, stirling, two_piece, semirook, semibishop, oracle };

std::string_view to_string(Method method);

struct CountResult {
  Integer value;
  Method method = Method::elementary;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Coefficient of x^(|L|-q) in prod over lines (x + size), i.e. the q-th
/// elementary symmetric function of the line sizes. A nonattacking placement
/// of a one-move rider picks q distinct lines and one cell on each.
Integer count_elementary(std::int64_t q, const LineMultiset& lines);

/// Alternating sum over partitions of q of
///   prod_i (alpha(lambda_i))^(n_i) / (lambda_i^(n_i) n_i!)
/// with sign (-1)^(q - sum n_i), evaluated in rationals. Throws InternalError
/// if the total is not a nonnegative integer.
Integer count_partition(std::int64_t q, const LineMultiset& lines);

/// The Stirling convolution on a rectangle: coefficient of x^(|L|-q) in
///   (x+s)^A (x+s+1)^B [sum_j c(s,j+1) x^j]^(2cd)
/// where the binomial factors contribute C(A,j) s^j and C(B,k) (s+1)^k.
Integer count_stirling(std::int64_t q, const OrientedInstance& inst);

/// Two pieces, any moveset:
///   u(2) = ( m^2 n^2 + (|M|-1) mn - sum over moves of alpha2 ) / 2
/// Each move is canonicalized and oriented on its own.
Integer count_two_pieces(const Moveset& moves, const BoardRect& board);

/// Pieces moving only along the n-direction: C(m,q) n^q.
Integer count_semirook(std::int64_t q, std::int64_t m, std::int64_t n);

/// Single diagonal (1,1) on an m x n board with m >= n:
///   sum_l n^(m-n-l+1) C(m-n+1, l) sum_j c(n,j) c(n, m+n-q-j-l+1)
/// where j runs over the support of both Stirling factors.
/// Throws InputError when m < n.
Integer count_semibishop(std::int64_t q, std::int64_t m, std::int64_t n);

enum class MethodChoice { automatic, elementary, partition, stirling, oracle, all };

std::string_view to_string(MethodChoice choice);
// Throws InputError for unknown names. Accepts "auto" for automatic.
MethodChoice parse_method_choice(std::string_view name);

// Thrown when two counting routes return different values for one query.
class MethodDisagreement : public Error {
 public:
  MethodDisagreement(std::string query, std::vector<CountResult> results);

  const std::string& query() const { return query_; }
  const std::vector<CountResult>& results() const { return results_; }

 private:
  std::string query_;
  std::vector<CountResult> results_;
};

/// Every route that applies to this query: elementary, partition, stirling,
/// two_piece (q = 2), semirook (axis moves), semibishop ((1,1) moves) and the
/// brute-force oracle when C(mn, q) fits in `budget`.
std::vector<CountResult> count_all(std::int64_t q, const Move& move, const BoardRect& board,
                                   const OracleBudget& budget = {});

/// Dispatch for a one-move rider. `move` may be signed. automatic uses the
/// elementary route; all runs count_all and throws MethodDisagreement unless
/// every route agrees.
CountResult count(std::int64_t q, const Move& move, const BoardRect& board, MethodChoice method,
                  const OracleBudget& budget = {});

}  // namespace riders

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "riders/exactmath.hpp"
#include "riders/geometry.hpp"

namespace riders {

// n -> u(q; n, n) as `period` polynomials, constituent r used when
// n mod period == r. Only asserted for n >= valid_from.
struct Quasipolynomial {
  std::int64_t period = 1;
  std::int64_t degree = 0;
  std::vector<RatPolynomial> constituents;
  std::int64_t valid_from = 0;
};

struct FitOptions {
  // Default (q + 1) * max(c, d).
  std::optional<std::int64_t> valid_from;
};

// The n values at which fit_square_board samples residue class r: the first
// degree + 2 values n >= valid_from with n = r (mod period).
std::vector<std::int64_t> sample_abscissas(std::int64_t period, std::int64_t degree,
                                           std::int64_t valid_from, std::int64_t residue);

// Must be safe to call concurrently.
using Sampler = std::function<Integer(std::int64_t n)>;

/// Fits `sample` as a quasipolynomial of the given period and degree.
/// Each residue class is interpolated on degree + 1 samples and checked
/// against one more; a mismatch throws RegimeError.
Quasipolynomial fit_quasipolynomial(const Sampler& sample, std::int64_t period, std::int64_t degree,
                                    std::int64_t valid_from);

/// Fits u(q; n, n) for a one-move rider with period max(c, d) and degree 2q.
Quasipolynomial fit_square_board(const Move& move, std::int64_t q, const FitOptions& options = {});

/// Smallest divisor p of the fitted period with constituent r equal to
/// constituent (r + p) mod period for every r.
std::int64_t minimal_period(const Quasipolynomial& qp);

/// Evaluates the constituent for n mod period at n. Throws RegimeError for
/// n < valid_from and InternalError for a non-integral value.
Integer evaluate(const Quasipolynomial& qp, std::int64_t n);

// u(q; n, n) via the elementary route; the sampling function of the fitter.
Integer square_board_count(const Move& move, std::int64_t q, std::int64_t n);

}  // namespace riders

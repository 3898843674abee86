#include "riders/quasipoly.hpp"

#include <algorithm>
#include <exception>

#include "riders/board_lines.hpp"
#include "riders/counting.hpp"
#include "riders/error.hpp"

namespace riders {

Integer square_board_count(const Move& move, std::int64_t q, std::int64_t n) {
  const Move canonical = canonicalize_move(move.c, move.d);
  return count_elementary(q, line_multiset_closed(orient(canonical, {n, n})));
}

std::vector<std::int64_t> sample_abscissas(std::int64_t period, std::int64_t degree,
                                           std::int64_t valid_from, std::int64_t residue) {
  const std::int64_t first = valid_from + (((residue - valid_from) % period) + period) % period;
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < degree + 2; ++k) out.push_back(first + k * period);
  return out;
}

Quasipolynomial fit_quasipolynomial(const Sampler& sample, std::int64_t period, std::int64_t degree,
                                    std::int64_t valid_from) {
  if (period < 1) throw InputError("quasipolynomial period must be positive");
  if (degree < 0) throw InputError("quasipolynomial degree must be nonnegative");
  Quasipolynomial qp;
  qp.period = period;
  qp.degree = degree;
  qp.valid_from = valid_from;
  qp.constituents.resize(static_cast<std::size_t>(period));

  // One residue class per iteration; exceptions are carried out of the
  // parallel region and rethrown in residue order.
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(period));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < period; ++r) {
    try {
      std::vector<SamplePoint> samples;
      for (auto n : sample_abscissas(period, degree, valid_from, r)) samples.push_back({n, Rational(sample(n))});
      const SamplePoint check = samples.back();
      samples.pop_back();
      RatPolynomial fitted = interpolate(samples);
      if (fitted.evaluate(Rational(check.abscissa)) != check.value) {
        throw RegimeError("quasipolynomial regime not reached; raise valid_from (residue " +
                          std::to_string(r) + ", n=" + std::to_string(check.abscissa) + ")");
      }
      qp.constituents[static_cast<std::size_t>(r)] = std::move(fitted);
    } catch (...) {
      failures[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return qp;
}

Quasipolynomial fit_square_board(const Move& move, std::int64_t q, const FitOptions& options) {
  if (q < 1) throw InputError("fit_square_board: q must be positive");
  const Move canonical = canonicalize_move(move.c, move.d);
  const std::int64_t period = std::max(canonical.c, canonical.d);
  const std::int64_t valid_from = options.valid_from.value_or((q + 1) * period);
  if (valid_from < 1) throw InputError("fit_square_board: valid_from must be positive");
  return fit_quasipolynomial([&](std::int64_t n) { return square_board_count(canonical, q, n); }, period,
                             2 * q, valid_from);
}

std::int64_t minimal_period(const Quasipolynomial& qp) {
  const auto period = static_cast<std::int64_t>(qp.constituents.size());
  for (std::int64_t p = 1; p < period; ++p) {
    if (period % p != 0) continue;
    bool repeats = true;
    for (std::int64_t r = 0; r < period && repeats; ++r) {
      repeats = qp.constituents[static_cast<std::size_t>(r)] ==
                qp.constituents[static_cast<std::size_t>((r + p) % period)];
    }
    if (repeats) return p;
  }
  return period;
}

Integer evaluate(const Quasipolynomial& qp, std::int64_t n) {
  if (n < qp.valid_from) {
    throw RegimeError("n=" + std::to_string(n) + " is below valid_from=" + std::to_string(qp.valid_from));
  }
  const auto& constituent = qp.constituents[static_cast<std::size_t>(n % qp.period)];
  return require_integral(constituent.evaluate(Rational(n)), "quasipolynomial evaluation");
}

}  // namespace riders

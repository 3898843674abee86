#include "riders/exactmath.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "riders/error.hpp"

namespace riders {
namespace {

// Lower-triangular table of exact values, extended row by row on demand.
// Readers take a shared lock; growth takes the exclusive lock, so each entry
// is computed once and then never changes.
class TriangularTable {
 public:
  using RowBuilder = void (*)(const std::vector<std::vector<Integer>>& rows, std::vector<Integer>& next);

  explicit TriangularTable(RowBuilder build) : build_(build) { rows_.push_back({Integer(1)}); }

  Integer at(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    const auto row = static_cast<std::size_t>(n);
    const auto col = static_cast<std::size_t>(k);
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return rows_[row][col];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= row) {
      std::vector<Integer> next(rows_.size() + 1);
      build_(rows_, next);
      rows_.push_back(std::move(next));
    }
    return rows_[row][col];
  }

 private:
  RowBuilder build_;
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

void pascal_row(const std::vector<std::vector<Integer>>& rows, std::vector<Integer>& next) {
  const auto& prev = rows.back();
  const std::size_t n = prev.size();
  next[0] = 1;
  next[n] = 1;
  for (std::size_t k = 1; k < n; ++k) next[k] = prev[k - 1] + prev[k];
}

// c(n+1, k) = n c(n, k) + c(n, k-1)
void stirling_row(const std::vector<std::vector<Integer>>& rows, std::vector<Integer>& next) {
  const auto& prev = rows.back();
  const std::size_t n = prev.size() - 1;
  next[0] = 0;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    Integer value = k <= n ? Integer(prev[k] * static_cast<unsigned long>(n)) : Integer(0);
    value += prev[k - 1];
    next[k] = std::move(value);
  }
}

TriangularTable& pascal_table() {
  static TriangularTable table(pascal_row);
  return table;
}

TriangularTable& stirling_table() {
  static TriangularTable table(stirling_row);
  return table;
}

constexpr std::int64_t kMemoizedBinomialRows = 1024;

void partitions_into(std::int64_t remaining, std::int64_t max_part, IntegerPartition& current,
                     std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    for (std::int64_t mult = remaining / part; mult >= 1; --mult) {
      current.parts.push_back({part, mult});
      partitions_into(remaining - part * mult, part - 1, current, out);
      current.parts.pop_back();
    }
  }
}

}  // namespace

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InputError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (n < kMemoizedBinomialRows) return pascal_table().at(n, k);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer stirling_first_unsigned(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InputError("stirling_first_unsigned: n must be nonnegative");
  return stirling_table().at(n, k);
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw InputError("factorial: n must be nonnegative");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer power(const Integer& base, std::int64_t exponent) {
  if (exponent < 0) throw InputError("power: negative exponent");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

std::int64_t IntegerPartition::total() const {
  std::int64_t sum = 0;
  for (const auto& p : parts) sum += p.part * p.multiplicity;
  return sum;
}

std::int64_t IntegerPartition::length() const {
  std::int64_t sum = 0;
  for (const auto& p : parts) sum += p.multiplicity;
  return sum;
}

std::vector<IntegerPartition> partitions_of(std::int64_t q) {
  if (q < 0) throw InputError("partitions_of: q must be nonnegative");
  std::vector<IntegerPartition> out;
  IntegerPartition current;
  partitions_into(q, q, current, out);
  return out;
}

bool is_integral(const Rational& value) { return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0; }

Integer require_integral(const Rational& value, const std::string& what) {
  if (!is_integral(value)) {
    throw InternalError(what + " produced non-integral value " + to_string(value));
  }
  return value.get_num() / value.get_den();
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& raw) {
  Rational value(raw);
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

RatPolynomial interpolate(std::span<const SamplePoint> points) {
  if (points.empty()) throw InputError("interpolate: empty sample set");
  std::map<std::int64_t, int> seen;
  for (const auto& p : points) {
    if (seen[p.abscissa]++ > 0) {
      throw InputError("interpolate: duplicate abscissa " + std::to_string(p.abscissa) +
                       " in sample set");
    }
  }

  // In-place divided differences: after pass k, diff[i] holds f[x_{i-k},...,x_i].
  const std::size_t count = points.size();
  std::vector<Rational> diff(count);
  for (std::size_t i = 0; i < count; ++i) diff[i] = points[i].value;
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t i = count - 1; i >= k; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / Rational(points[i].abscissa - points[i - k].abscissa);
    }
  }

  // Nested Newton form back into the monomial basis.
  auto result = RatPolynomial::constant(diff[count - 1]);
  for (std::size_t i = count - 1; i-- > 0;) {
    result = result * RatPolynomial::shifted_x(Rational(-points[i].abscissa)) +
             RatPolynomial::constant(diff[i]);
  }
  return result;
}

IntPolynomial rising_factorial_coeffs(std::int64_t s) {
  if (s < 1) throw InputError("rising_factorial_coeffs: s must be positive");
  auto result = IntPolynomial::constant(1);
  for (std::int64_t i = 1; i < s; ++i) result = result * IntPolynomial::shifted_x(Integer(i));
  return result;
}

}  // namespace riders

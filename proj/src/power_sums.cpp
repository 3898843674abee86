#include "riders/power_sums.hpp"

#include "riders/error.hpp"

namespace riders {

Integer alpha_general(std::int64_t p, const LineMultiset& lines) {
  if (p < 1) throw InputError("alpha_general: p must be positive");
  Integer total = 0;
  for (const auto& [size, mult] : lines.entries()) total += Integer(mult) * power(Integer(size), p);
  return total;
}

Integer alpha2_closed(const OrientedInstance& inst) {
  require_line_hypothesis(inst);
  // Every line is a single cell.
  if (!inst.move_fits) return Integer(inst.m) * Integer(inst.n);
  const Rational c(inst.c), d(inst.d), m(inst.m), n(inst.n), nbar(inst.nbar);
  Rational value = (3 * d * m * n * n - c * n * n * n) / (3 * d * d) + c * n / 3 +
                   nbar * (d - nbar) / (d * d) * (d * m - c * n - c * (d - 2 * nbar) / 3);
  value.canonicalize();
  return require_integral(value, "alpha2_closed");
}

Integer alpha3_closed(const OrientedInstance& inst) {
  require_line_hypothesis(inst);
  if (!inst.move_fits) return Integer(inst.m) * Integer(inst.n);
  const Rational c(inst.c), d(inst.d), m(inst.m), n(inst.n), nbar(inst.nbar);
  Rational value = (2 * d * m * n * n * n - c * n * n * n * n) / (2 * d * d * d) +
                   c * n * n / (2 * d) +
                   nbar * (d - nbar) / (d * d * d) *
                       ((3 * n + d - 2 * nbar) * d * m - (3 * n + 2 * d - 4 * nbar) * c * n +
                        3 * c * nbar * (d - nbar) / 2);
  value.canonicalize();
  return require_integral(value, "alpha3_closed");
}

}  // namespace riders

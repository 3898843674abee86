#pragma once

#include <cstdint>

#include "riders/board_lines.hpp"
#include "riders/exactmath.hpp"

namespace riders {

/// Sum of l^p over the line multiset: the number of ordered p-tuples of
/// (not necessarily distinct) cells sharing one line. p = 1 gives m*n.
Integer alpha_general(std::int64_t p, const LineMultiset& lines);

/// Closed form for p = 2 on an oriented instance:
///   (3dmn^2 - cn^3)/(3d^2) + cn/3 + nbar(d-nbar)/d^2 * (dm - cn - c(d-2nbar)/3)
/// Note the 3d^2 in the first denominator.
Integer alpha2_closed(const OrientedInstance& inst);

/// Closed form for p = 3 on an oriented instance:
///   (2dmn^3 - cn^4)/(2d^3) + cn^2/(2d)
///   + nbar(d-nbar)/d^3 * ((3n+d-2nbar)dm - (3n+2d-4nbar)cn + 3c nbar(d-nbar)/2)
Integer alpha3_closed(const OrientedInstance& inst);

}  // namespace riders

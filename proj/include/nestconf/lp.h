#pragma once

#include <optional>
#include <vector>

#include "nestconf/exponent.h"
#include "nestconf/linalg.h"

namespace nestconf {

// Exact phase-one simplex: some x >= 0 with a x == b, or
// nullopt when the system is infeasible.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

// Some w >= 0 with row . w >= 1 for every row, or nullopt if none exists.
// Solved through the Farkas alternative, which has only n + 1 equations; the
// weight is read off its phase-one multipliers and checked exactly.
std::optional<std::vector<Rational>> strictly_positive_weight(const std::vector<ExponentVector>& rows);

}  // namespace nestconf

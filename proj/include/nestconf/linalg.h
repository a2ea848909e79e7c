#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nestconf/exponent.h"
#include "nestconf/rational.h"

namespace nestconf {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Row-style Hermite normal form: transform * input == echelon, with
// `transform` unimodular. Rows [0, rank) of `echelon` are nonzero with
// strictly increasing pivot columns and positive pivots; the remaining rows
// are zero.
struct HermiteForm {
  IntegerMatrix echelon;
  IntegerMatrix transform;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

HermiteForm hermite_form(IntegerMatrix a);

// Integer basis of {c in Z^n : sum_j c_j columns[j] = 0}, size-reduced.
std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& columns);

// Integer coefficients c with sum_j c_j columns[j] == v, if any exist.
std::optional<ExponentVector> solve_integer(const std::vector<ExponentVector>& columns, const ExponentVector& v);

// Any rational x with a x == b (free variables set to zero).
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a);

std::size_t rank_of(const std::vector<ExponentVector>& columns);

}  // namespace nestconf

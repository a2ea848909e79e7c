#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "nestconf/configuration.h"
#include "nestconf/families.h"
#include "nestconf/nested.h"

namespace nestconf {

// A p x p nonnegative integer matrix, row-major.
struct SquareMatrixPoint {
  std::size_t size = 0;
  ExponentVector entries;

  Exponent at(std::size_t row, std::size_t col) const { return entries[row * size + col]; }
  ExponentVector row_sums() const;
  ExponentVector column_sums() const;
  friend auto operator<=>(const SquareMatrixPoint&, const SquareMatrixPoint&) = default;
  friend bool operator==(const SquareMatrixPoint&, const SquareMatrixPoint&) = default;
};

// All p! permutation matrices: even permutations in lexicographic order of
// their words, then odd ones. For p = 3 this is identity, (231), (312),
// (132), (213), (321).
std::vector<SquareMatrixPoint> permutation_matrices(std::size_t p);
Configuration permutation_configuration(std::size_t p);

// Distinct sums of n permutation matrices of size p (default 3), in order of
// first occurrence over nondecreasing index sequences.
std::vector<SquareMatrixPoint> birkhoff_multiple_points(std::size_t n, std::size_t p = 3);

// All nonnegative 3 x 3 integer matrices with row sums r and column sums c,
// in lexicographic order. Throws when the totals differ.
std::vector<SquareMatrixPoint> transportation_points(const ExponentVector& r, const ExponentVector& c);

// A = {t^n} over the 3 x 3 permutation configuration.
NestedConfiguration birkhoff_nested(std::size_t n);

// x_{123M} - x_{456M} (marked on the first) for every context M of size
// n - 3: equal columns of the variable list, hence degree-one elements of its
// toric ideal that items (i) and (ii) never produce. Empty for n < 3.
std::vector<MarkedBinomial> birkhoff_linear_relations(std::size_t n);

struct BirkhoffReport {
  std::size_t n = 0;
  std::size_t variables = 0;
  std::size_t points = 0;
  Family family;  // on the multiset variables
  // The family moved to the point presentation: each variable replaced by the
  // first variable with the same matrix, trivial binomials dropped.
  std::vector<MarkedBinomial> point_family;
  VerificationVerdict verdict;  // against the oracle of the point configuration
  // Against the oracle of the full variable list; only when variables collide.
  std::optional<VerificationVerdict> variable_verdict;
  DegreeStats stats;
};

BirkhoffReport birkhoff_pipeline(std::size_t n, const VerifyOptions& options = {}, bool check_variable_presentation = true);

}  // namespace nestconf

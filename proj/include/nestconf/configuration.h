#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestconf/exponent.h"
#include "nestconf/rational.h"

namespace nestconf {

// A finite list of monomials t^{a_j} in `dim` variables. Columns follow the
// matrix convention M_A: variables are rows, monomials are columns. Repeated
// columns are allowed; the toric ideal is then that of the column list.
struct Configuration {
  std::size_t dim = 0;
  std::vector<ExponentVector> columns;
  std::vector<std::string> names;  // optional row labels
  std::optional<std::vector<Rational>> grading;

  std::size_t size() const { return columns.size(); }
  // pi(x^m) = t^{sum_j m_j a_j}
  ExponentVector image(const ExponentVector& monomial) const;
  // w . v for the stored grading
  Rational degree_of(const ExponentVector& v) const;
  // largest |a_j|
  Exponent max_column_degree() const;
  // Distinct columns in first-occurrence order.
  Configuration deduplicated() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dim == b.dim && a.columns == b.columns;
  }
};

// A rational w with w . a_j == 1 for every column, found by exact Gaussian
// elimination; nullopt when no such w exists. Throws on an empty list or
// ragged columns.
std::optional<std::vector<Rational>> check_configuration(const std::vector<ExponentVector>& columns);

// Validates and attaches the grading; throws std::invalid_argument when the
// columns do not form a configuration.
Configuration make_configuration(std::vector<ExponentVector> columns, std::vector<std::string> names = {});

}  // namespace nestconf

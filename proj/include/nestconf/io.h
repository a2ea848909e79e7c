#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/birkhoff.h"
#include "nestconf/configuration.h"
#include "nestconf/monomial_order.h"
#include "nestconf/nested.h"
#include "nestconf/normality.h"

namespace nestconf {

// Positions are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Configuration files:
//   # free comments
//   # names: u1 u2 v1 v2      (optional row labels)
//   d n
//   d rows of n nonnegative integers
Configuration parse_configuration(const std::string& text, const std::string& source = "<input>");
std::string format_configuration(const Configuration& a);
Configuration read_configuration_file(const std::string& path);

// Binomial files: one `MARKED - OTHER` per line, monomials written as
// `name^e*name` or `1`; '#' starts a comment. Names are looked up in
// `variables` (e.g. z1..zn or nested display names).
std::vector<MarkedBinomial> parse_binomials(const std::string& text, const std::vector<std::string>& variables,
                                            const std::string& source = "<input>");
std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& variables);
std::string format_binomials(const std::vector<MarkedBinomial>& family, const std::vector<std::string>& variables);

// z1..zn
std::vector<std::string> plain_names(std::size_t n);
// display() of every variable
std::vector<std::string> nested_names(const NestedConfiguration& n);

// lex | grlex | grevlex | weight:w1,w2,...  (weights may be fractions)
MonomialOrder parse_order(const std::string& text, std::size_t variables);

// Nested specification files, one path per line relative to the file:
//   outer: A.cfg
//   inner: B1.cfg
//   inner: B2.cfg
struct NestedSpec {
  std::string outer;
  std::vector<std::string> inner;
};
NestedSpec parse_nested_spec(const std::string& text, const std::string& source = "<input>");
NestedConfiguration read_nested_spec_file(const std::string& path);

// "holes=H search_bound=B certifying_bound=C exhaustive=0|1 pattern=0|1"
// followed by "degree: (v1,...)" lines.
std::string format_hole_report(const HoleReport& r);

// 9 integers per line, row-major
std::string format_points(const std::vector<SquareMatrixPoint>& points);

std::string read_file(const std::string& path);

}  // namespace nestconf

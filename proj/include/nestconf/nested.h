#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/configuration.h"

namespace nestconf {

// (outer variable i, inner generator j), both 0-based. Displayed 1-based.
struct Pair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;
};

// x^{(k)}_{(i1,j1)...(ir,jr)}: outer column k of A, pairs sorted ascending.
struct NestedVariable {
  std::size_t k = 0;
  std::vector<Pair> pairs;
  friend auto operator<=>(const NestedVariable&, const NestedVariable&) = default;
  friend bool operator==(const NestedVariable&, const NestedVariable&) = default;
};

// "x[k|(i1,j1)(i2,j2)...]", 1-based
std::string display(const NestedVariable& v);

struct NestedConfiguration {
  Configuration outer;
  std::vector<Configuration> inner;
  std::size_t degree = 0;  // r, the common column degree of A
  std::vector<NestedVariable> variables;
  // Columns over the concatenated alphabets u^(1),...,u^(d), one per
  // variable; equal columns may occur (e.g. multiples of the Birkhoff polytope).
  Configuration config;
  std::vector<std::size_t> offsets;  // start of u^(i) inside a column

  std::size_t size() const { return variables.size(); }
  // Index of a variable; throws std::out_of_range when it is not admissible.
  std::size_t index_of(const NestedVariable& v) const;
  bool contains(const NestedVariable& v) const { return lookup_.count(v) != 0; }
  // For each variable, the first variable with the same column.
  std::vector<std::size_t> representatives() const;
  // The distinct columns, in first-occurrence order.
  Configuration point_configuration() const { return config.deduplicated(); }

  std::map<NestedVariable, std::size_t> lookup_;
};

// Enumerates every admissible variable of A(B_1,...,B_d) ordered by (k, pairs).
// Throws std::invalid_argument when A's columns have different degrees, when
// d does not match the number of inner configurations, when A repeats a
// column, or when the result admits no grading.
NestedConfiguration build_nested(const Configuration& outer, const std::vector<Configuration>& inner);

std::vector<Pair> sort_pairs(std::vector<Pair> seq);

// Merge, sort, deal odd positions to the first output and even positions to
// the second. Throws std::invalid_argument when the outer indices differ.
std::pair<NestedVariable, NestedVariable> sort_split(const NestedVariable& u, const NestedVariable& v);

// Per outer letter i, replaces the inner multiset by the support of its normal
// form modulo inner[i]. An empty basis stands for the zero ideal.
NestedVariable standard_expression(const NestedVariable& v, const std::vector<GroebnerBasis>& inner);

// The maps on monomials over the nested variables (exponent vectors indexed
// like N.variables).
ExponentVector hom_phi0(const NestedConfiguration& n, const ExponentVector& m);
// Uses standard expressions when `inner` is given, raw indices otherwise.
ExponentVector hom_phij(const NestedConfiguration& n, const ExponentVector& m, std::size_t j,
                        const std::vector<GroebnerBasis>* inner = nullptr);
ExponentVector hom_psi(const NestedConfiguration& n, const ExponentVector& m);
ExponentVector hom_rhok(const NestedConfiguration& n, const ExponentVector& m, std::size_t k);

// Monomial over nested variables as "x[..]^2*x[..]", "1" when empty.
std::string display_monomial(const NestedConfiguration& n, const ExponentVector& m);
std::string display_binomial(const NestedConfiguration& n, const MarkedBinomial& b);

}  // namespace nestconf

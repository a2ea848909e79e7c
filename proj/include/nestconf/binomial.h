#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nestconf/exponent.h"
#include "nestconf/monomial_order.h"

namespace nestconf {

enum class Side { Plus, Minus };

// A pure-difference binomial x^plus - x^minus with a declared initial side.
// The marking is never inferred; toric generators are stored as given and
// common factors are only removed by an explicit call to cancel_common_factor.
struct MarkedBinomial {
  ExponentVector plus;
  ExponentVector minus;
  Side marked = Side::Plus;

  // Builds lead - tail with the lead marked. Throws when lead == tail or the
  // lengths differ.
  static MarkedBinomial make(ExponentVector lead, ExponentVector tail);
  // Orients plus - minus so that `order` picks the marked side. Returns
  // nullopt for the zero binomial.
  static std::optional<MarkedBinomial> oriented(ExponentVector a, ExponentVector b, const MonomialOrder& order);

  const ExponentVector& lead() const { return marked == Side::Plus ? plus : minus; }
  const ExponentVector& tail() const { return marked == Side::Plus ? minus : plus; }
  std::size_t variables() const { return plus.size(); }
  Exponent degree() const;

  // Same binomial with the lead stored on the plus side.
  MarkedBinomial canonical() const { return {lead(), tail(), Side::Plus}; }

  friend auto operator<=>(const MarkedBinomial&, const MarkedBinomial&) = default;
  friend bool operator==(const MarkedBinomial&, const MarkedBinomial&) = default;
};

MarkedBinomial cancel_common_factor(const MarkedBinomial& b);

// Sorts by (lead, tail) and removes duplicates.
void canonicalize(std::vector<MarkedBinomial>& family);

struct CoherenceWitness {
  // Weight order (nonnegative weights plus tiebreak) under which every marked
  // side is the initial term.
  MonomialOrder order;
};

struct TerminationEvidenced {};

using Certificate = std::variant<MonomialOrder, CoherenceWitness, TerminationEvidenced>;

struct GroebnerBasis {
  std::vector<MarkedBinomial> elements;
  Certificate certificate = TerminationEvidenced{};
  bool reduced = false;

  // The monomial order backing the marking, if one is known.
  const MonomialOrder* order() const;
  std::size_t variables() const { return elements.empty() ? 0 : elements.front().variables(); }
  Exponent max_degree() const;
};

}  // namespace nestconf

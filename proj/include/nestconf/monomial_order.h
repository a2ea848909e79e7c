#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nestconf/exponent.h"
#include "nestconf/rational.h"

namespace nestconf {

enum class OrderKind { Lex, GradedLex, GradedRevLex, Weight };

// A total monomial order on a fixed number of variables.
//
// `priority` lists variable indices from most to least significant, so
// priority = {0,1,2} means x1 > x2 > x3. Weight orders compare w.u first and
// break ties with `tiebreak` (one of the other three kinds, same priority).
// Weights must be nonnegative so the order stays well-founded.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t n);
  static MonomialOrder graded_lex(std::size_t n);
  static MonomialOrder graded_revlex(std::size_t n);
  static MonomialOrder weighted(std::vector<Rational> weights, OrderKind tiebreak = OrderKind::GradedRevLex);

  // Same kind with a different variable priority.
  MonomialOrder with_priority(std::vector<std::size_t> priority) const;

  std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) const;
  bool greater(const ExponentVector& u, const ExponentVector& v) const { return compare(u, v) > 0; }

  OrderKind kind() const { return kind_; }
  OrderKind tiebreak() const { return tiebreak_; }
  std::size_t size() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // "lex", "grlex", "grevlex", "weight:1,2,3" (priority suffix when not identity).
  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.tiebreak_ == b.tiebreak_ && a.priority_ == b.priority_ &&
           a.weights_ == b.weights_;
  }

 private:
  MonomialOrder(OrderKind kind, std::size_t n);
  std::strong_ordering compare_plain(OrderKind kind, const ExponentVector& u, const ExponentVector& v) const;

  OrderKind kind_;
  OrderKind tiebreak_ = OrderKind::GradedRevLex;
  std::vector<std::size_t> priority_;
  std::vector<Rational> weights_;
  // weights_ scaled by the lcm of their denominators
  std::vector<Exponent> integer_weights_;
};

}  // namespace nestconf

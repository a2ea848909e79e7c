#include "nestconf/binomial.h"

#include <algorithm>
#include <stdexcept>

namespace nestconf {

MarkedBinomial MarkedBinomial::make(ExponentVector lead, ExponentVector tail) {
  require_same_length(lead, tail);
  if (lead == tail) throw std::invalid_argument("binomial with equal sides is zero");
  return {std::move(lead), std::move(tail), Side::Plus};
}

std::optional<MarkedBinomial> MarkedBinomial::oriented(ExponentVector a, ExponentVector b,
                                                       const MonomialOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return MarkedBinomial{std::move(a), std::move(b), Side::Plus};
  return MarkedBinomial{std::move(b), std::move(a), Side::Plus};
}

Exponent MarkedBinomial::degree() const { return std::max(total_degree(plus), total_degree(minus)); }

MarkedBinomial cancel_common_factor(const MarkedBinomial& b) {
  ExponentVector g = gcd(b.plus, b.minus);
  return {subtract(b.plus, g), subtract(b.minus, g), b.marked};
}

void canonicalize(std::vector<MarkedBinomial>& family) {
  for (auto& f : family) f = f.canonical();
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

const MonomialOrder* GroebnerBasis::order() const {
  if (auto* o = std::get_if<MonomialOrder>(&certificate)) return o;
  if (auto* c = std::get_if<CoherenceWitness>(&certificate)) return &c->order;
  return nullptr;
}

Exponent GroebnerBasis::max_degree() const {
  Exponent d = 0;
  for (const auto& e : elements) d = std::max(d, e.degree());
  return d;
}

}  // namespace nestconf

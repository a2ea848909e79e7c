#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/monomial_order.h"

namespace nestconf {

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  // Abort when an inserted basis element exceeds this degree (0 disables).
  Exponent degree_cap = 12;
  // Variables the ideal is known to be saturated with respect to; common
  // factors in these variables are divided out during reduction.
  std::vector<bool> saturated;
};

struct BuchbergerStats {
  std::size_t pairs_reduced = 0;
  std::size_t max_basis = 0;
};

// Reduced Groebner basis of the ideal generated by pure-difference binomials.
// S-pairs are taken by smallest lcm degree, ties by lowest index pair;
// Gebauer-Moeller criteria prune pairs. Output: leads on the plus side,
// sorted by (lead, tail).
std::vector<MarkedBinomial> binomial_groebner(const std::vector<MarkedBinomial>& generators,
                                              const MonomialOrder& order, const BuchbergerOptions& options = {},
                                              BuchbergerStats* stats = nullptr);

}  // namespace nestconf

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nestconf/binomial.h"

namespace nestconf {

inline constexpr std::size_t kDefaultReductionBudget = 1'000'000;

// kDefaultReductionBudget unless NESTCONF_BUDGET holds a positive integer.
std::size_t default_budget();

struct ReductionResult {
  ExponentVector normal_form;
  std::size_t steps = 0;
  // false when the budget ran out (the marking may not terminate)
  bool complete = true;
  // set only when cycle detection was requested and a monomial repeated
  bool cycle = false;
};

// Rewrites monomials with a fixed list of marked binomials. A step replaces
// the marked term of the lowest-index element dividing the monomial by the
// opposite term. No order is needed; the budget bounds the number of steps.
class MarkedReducer {
 public:
  explicit MarkedReducer(std::span<const MarkedBinomial> basis);

  std::optional<std::size_t> find_divisor(const ExponentVector& m) const;
  ReductionResult reduce(ExponentVector m, std::size_t budget = default_budget(),
                         bool detect_cycles = false) const;

  std::size_t size() const { return leads_.size(); }
  std::size_t variables() const { return variables_; }

 private:
  struct SparseEntry {
    std::size_t var;
    Exponent value;
  };
  std::size_t variables_ = 0;
  std::vector<std::vector<SparseEntry>> leads_;
  std::vector<std::vector<SparseEntry>> deltas_;  // tail - lead
  // element indices bucketed by the first variable in the support of their lead
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> constant_leads_;
};

ReductionResult marked_reduce(const ExponentVector& m, std::span<const MarkedBinomial> basis,
                              std::size_t budget = default_budget());
ReductionResult marked_reduce(const ExponentVector& m, const GroebnerBasis& basis,
                              std::size_t budget = default_budget());

}  // namespace nestconf

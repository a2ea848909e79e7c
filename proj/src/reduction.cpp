#include "nestconf/reduction.h"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace nestconf {

std::size_t default_budget() {
  if (const char* env = std::getenv("NESTCONF_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultReductionBudget;
}

MarkedReducer::MarkedReducer(std::span<const MarkedBinomial> basis) {
  if (!basis.empty()) variables_ = basis.front().variables();
  buckets_.resize(variables_);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const auto& b = basis[idx];
    if (b.variables() != variables_) throw std::invalid_argument("basis elements have different lengths");
    std::vector<SparseEntry> lead, delta;
    for (std::size_t v = 0; v < variables_; ++v) {
      if (b.lead()[v] != 0) lead.push_back({v, b.lead()[v]});
      Exponent d = checked_sub(b.tail()[v], b.lead()[v]);
      if (d != 0) delta.push_back({v, d});
    }
    if (lead.empty())
      constant_leads_.push_back(idx);
    else
      buckets_[lead.front().var].push_back(idx);
    leads_.push_back(std::move(lead));
    deltas_.push_back(std::move(delta));
  }
}

std::optional<std::size_t> MarkedReducer::find_divisor(const ExponentVector& m) const {
  if (!constant_leads_.empty()) return constant_leads_.front();
  std::optional<std::size_t> best;
  for (std::size_t v = 0; v < variables_; ++v) {
    if (m[v] == 0) continue;
    for (std::size_t idx : buckets_[v]) {
      if (best && idx >= *best) break;  // buckets are sorted by index
      bool ok = true;
      for (const auto& e : leads_[idx])
        if (m[e.var] < e.value) {
          ok = false;
          break;
        }
      if (ok) {
        best = idx;
        break;
      }
    }
  }
  return best;
}

ReductionResult MarkedReducer::reduce(ExponentVector m, std::size_t budget, bool detect_cycles) const {
  if (m.size() != variables_ && !leads_.empty())
    throw std::invalid_argument("monomial length does not match the basis");
  ReductionResult r;
  std::set<ExponentVector> seen;
  while (auto idx = find_divisor(m)) {
    if (r.steps >= budget) {
      r.complete = false;
      break;
    }
    if (detect_cycles && !seen.insert(m).second) {
      r.cycle = true;
      r.complete = false;
      break;
    }
    for (const auto& e : deltas_[*idx]) m[e.var] = checked_add(m[e.var], e.value);
    ++r.steps;
  }
  r.normal_form = std::move(m);
  return r;
}

ReductionResult marked_reduce(const ExponentVector& m, std::span<const MarkedBinomial> basis, std::size_t budget) {
  return MarkedReducer(basis).reduce(m, budget);
}

ReductionResult marked_reduce(const ExponentVector& m, const GroebnerBasis& basis, std::size_t budget) {
  return marked_reduce(m, std::span<const MarkedBinomial>(basis.elements), budget);
}

}  // namespace nestconf

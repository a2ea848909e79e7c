#include "nestconf/configuration.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nestconf/linalg.h"

namespace nestconf {

ExponentVector Configuration::image(const ExponentVector& monomial) const {
  if (monomial.size() != columns.size())
    throw std::invalid_argument("monomial has " + std::to_string(monomial.size()) + " entries, configuration has " +
                                std::to_string(columns.size()) + " columns");
  ExponentVector r(dim, 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (monomial[j] == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) r[i] = checked_add(r[i], checked_mul(monomial[j], columns[j][i]));
  }
  return r;
}

Rational Configuration::degree_of(const ExponentVector& v) const {
  if (!grading) throw std::logic_error("configuration has no grading");
  if (v.size() != dim) throw std::invalid_argument("vector length does not match configuration dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < dim; ++i) s += (*grading)[i] * static_cast<long>(v[i]);
  return s;
}

Exponent Configuration::max_column_degree() const {
  Exponent d = 0;
  for (const auto& c : columns) d = std::max(d, total_degree(c));
  return d;
}

Configuration Configuration::deduplicated() const {
  Configuration out = *this;
  out.columns.clear();
  std::set<ExponentVector> seen;
  for (const auto& c : columns)
    if (seen.insert(c).second) out.columns.push_back(c);
  return out;
}

std::optional<std::vector<Rational>> check_configuration(const std::vector<ExponentVector>& columns) {
  if (columns.empty()) throw std::invalid_argument("configuration has no columns");
  const std::size_t d = columns.front().size();
  RationalMatrix a;
  for (const auto& c : columns) {
    if (c.size() != d) throw std::invalid_argument("configuration columns have different lengths");
    if (!is_nonnegative(c)) throw std::invalid_argument("configuration column has a negative exponent");
    std::vector<Rational> row;
    for (Exponent e : c) row.emplace_back(static_cast<long>(e));
    a.push_back(std::move(row));
  }
  return solve_rational(a, std::vector<Rational>(columns.size(), 1));
}

Configuration make_configuration(std::vector<ExponentVector> columns, std::vector<std::string> names) {
  auto w = check_configuration(columns);
  if (!w) throw std::invalid_argument("not a configuration: no rational w with w.a = 1 for every column");
  Configuration c;
  c.dim = columns.front().size();
  if (!names.empty() && names.size() != c.dim) throw std::invalid_argument("name count does not match dimension");
  c.columns = std::move(columns);
  c.names = std::move(names);
  c.grading = std::move(w);
  return c;
}

}  // namespace nestconf

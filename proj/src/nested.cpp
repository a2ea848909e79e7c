#include "nestconf/nested.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nestconf/toric.h"

namespace nestconf {

std::string display(const NestedVariable& v) {
  std::string s = "x[" + std::to_string(v.k + 1) + "|";
  for (const auto& p : v.pairs) s += "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
  return s + "]";
}

std::size_t NestedConfiguration::index_of(const NestedVariable& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) throw std::out_of_range("not a variable of the nested configuration: " + display(v));
  return it->second;
}

std::vector<std::size_t> NestedConfiguration::representatives() const {
  std::map<ExponentVector, std::size_t> first;
  std::vector<std::size_t> rep(variables.size());
  for (std::size_t v = 0; v < variables.size(); ++v) rep[v] = first.emplace(config.columns[v], v).first->second;
  return rep;
}

namespace {

// All nondecreasing sequences of length `len` over [0, n).
void multisets(std::size_t n, std::size_t len, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = cur.empty() ? 0 : cur.back(); j < n; ++j) {
    cur.push_back(j);
    multisets(n, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

NestedConfiguration build_nested(const Configuration& outer, const std::vector<Configuration>& inner) {
  if (outer.columns.empty()) throw std::invalid_argument("outer configuration has no columns");
  const std::size_t d = outer.dim;
  if (inner.size() != d)
    throw std::invalid_argument("outer configuration has dimension " + std::to_string(d) + " but " +
                                std::to_string(inner.size()) + " inner configurations were given");
  const Exponent r = total_degree(outer.columns.front());
  for (const auto& c : outer.columns) {
    if (c.size() != d) throw std::invalid_argument("outer columns have different lengths");
    if (total_degree(c) != r) throw std::invalid_argument("outer columns do not all have the same degree");
  }
  if (std::set<ExponentVector>(outer.columns.begin(), outer.columns.end()).size() != outer.columns.size())
    throw std::invalid_argument("outer configuration repeats a column");

  NestedConfiguration n;
  n.outer = outer;
  n.inner = inner;
  n.degree = static_cast<std::size_t>(r);
  std::size_t dim = 0;
  for (const auto& b : inner) {
    if (b.columns.empty()) throw std::invalid_argument("inner configuration has no columns");
    n.offsets.push_back(dim);
    dim += b.dim;
  }

  std::vector<ExponentVector> columns;
  for (std::size_t k = 0; k < outer.columns.size(); ++k) {
    // Choices per letter i: multisets of size a_k[i] over B_i's generators.
    std::vector<std::vector<std::vector<std::size_t>>> choices(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::size_t> cur;
      multisets(inner[i].columns.size(), static_cast<std::size_t>(outer.columns[k][i]), cur, choices[i]);
    }
    std::vector<std::size_t> pick(d, 0);
    while (true) {
      NestedVariable v{k, {}};
      ExponentVector col(dim, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j : choices[i][pick[i]]) {
          v.pairs.push_back({i, j});
          const auto& m = inner[i].columns[j];
          for (std::size_t c = 0; c < m.size(); ++c) col[n.offsets[i] + c] += m[c];
        }
      n.lookup_.emplace(v, n.variables.size());
      n.variables.push_back(std::move(v));
      columns.push_back(std::move(col));
      // odometer, last letter fastest
      std::size_t i = d;
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < inner[i].dim; ++c)
      names.push_back(i < inner.size() && c < inner[i].names.size() ? inner[i].names[c]
                                                                      : "u" + std::to_string(i + 1) + "_" + std::to_string(c + 1));
  n.config = make_configuration(std::move(columns), std::move(names));
  return n;
}

std::vector<Pair> sort_pairs(std::vector<Pair> seq) {
  std::stable_sort(seq.begin(), seq.end());
  return seq;
}

std::pair<NestedVariable, NestedVariable> sort_split(const NestedVariable& u, const NestedVariable& v) {
  if (u.k != v.k) throw std::invalid_argument("sort_split needs variables with the same outer index");
  std::vector<Pair> merged = u.pairs;
  merged.insert(merged.end(), v.pairs.begin(), v.pairs.end());
  merged = sort_pairs(std::move(merged));
  NestedVariable a{u.k, {}}, b{u.k, {}};
  for (std::size_t p = 0; p < merged.size(); ++p) (p % 2 == 0 ? a : b).pairs.push_back(merged[p]);
  return {a, b};
}

NestedVariable standard_expression(const NestedVariable& v, const std::vector<GroebnerBasis>& inner) {
  NestedVariable out{v.k, {}};
  std::size_t p = 0;
  while (p < v.pairs.size()) {
    const std::size_t i = v.pairs[p].i;
    std::size_t q = p;
    while (q < v.pairs.size() && v.pairs[q].i == i) ++q;
    if (i >= inner.size()) throw std::invalid_argument("standard_expression: missing basis for letter " + std::to_string(i + 1));
    const GroebnerBasis& g = inner[i];
    if (g.elements.empty()) {
      out.pairs.insert(out.pairs.end(), v.pairs.begin() + static_cast<std::ptrdiff_t>(p),
                       v.pairs.begin() + static_cast<std::ptrdiff_t>(q));
    } else {
      ExponentVector z(g.variables(), 0);
      for (std::size_t s = p; s < q; ++s) {
        if (v.pairs[s].j >= z.size()) throw std::invalid_argument("standard_expression: basis has too few variables");
        ++z[v.pairs[s].j];
      }
      auto nf = ideal_normal_form(z, g);
      for (std::size_t j = 0; j < nf.size(); ++j)
        for (Exponent e = 0; e < nf[j]; ++e) out.pairs.push_back({i, j});
    }
    p = q;
  }
  return out;
}

namespace {

void require_monomial(const NestedConfiguration& n, const ExponentVector& m) {
  if (m.size() != n.variables.size()) throw std::invalid_argument("monomial length does not match the variable count");
}

}  // namespace

ExponentVector hom_phi0(const NestedConfiguration& n, const ExponentVector& m) {
  require_monomial(n, m);
  ExponentVector y(n.outer.columns.size(), 0);
  for (std::size_t v = 0; v < m.size(); ++v) y[n.variables[v].k] += m[v];
  return y;
}

ExponentVector hom_phij(const NestedConfiguration& n, const ExponentVector& m, std::size_t j,
                        const std::vector<GroebnerBasis>* inner) {
  require_monomial(n, m);
  if (j >= n.inner.size()) throw std::out_of_range("hom_phij: no inner configuration " + std::to_string(j + 1));
  ExponentVector z(n.inner[j].columns.size(), 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    const NestedVariable var = inner ? standard_expression(n.variables[v], *inner) : n.variables[v];
    for (const auto& p : var.pairs)
      if (p.i == j) z[p.j] += m[v];
  }
  return z;
}

ExponentVector hom_psi(const NestedConfiguration& n, const ExponentVector& m) {
  require_monomial(n, m);
  ExponentVector t(n.outer.dim, 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    const auto& a = n.outer.columns[n.variables[v].k];
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_add(t[i], checked_mul(m[v], a[i]));
  }
  return t;
}

ExponentVector hom_rhok(const NestedConfiguration& n, const ExponentVector& m, std::size_t k) {
  require_monomial(n, m);
  if (k >= n.inner.size()) throw std::out_of_range("hom_rhok: no inner configuration " + std::to_string(k + 1));
  ExponentVector image = n.config.image(m);
  return ExponentVector(image.begin() + static_cast<std::ptrdiff_t>(n.offsets[k]),
                        image.begin() + static_cast<std::ptrdiff_t>(n.offsets[k] + n.inner[k].dim));
}

std::string display_monomial(const NestedConfiguration& n, const ExponentVector& m) {
  require_monomial(n, m);
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += display(n.variables[v]);
    if (m[v] != 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string display_binomial(const NestedConfiguration& n, const MarkedBinomial& b) {
  return display_monomial(n, b.lead()) + " - " + display_monomial(n, b.tail());
}

}  // namespace nestconf

#include "nestconf/toric.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nestconf/linalg.h"
#include "nestconf/reduction.h"

namespace nestconf {

std::vector<MarkedBinomial> lattice_generators(const Configuration& a) {
  std::vector<MarkedBinomial> out;
  if (a.columns.empty()) return out;
  for (const auto& c : integer_kernel(a.columns)) out.push_back({positive_part(c), negative_part(c), Side::Plus});
  return out;
}

std::vector<MarkedBinomial> fiber_generators(const Configuration& a, Exponent max_degree) {
  std::vector<MarkedBinomial> out;
  const std::size_t n = a.columns.size();
  if (n == 0) return out;
  // Monomials of each degree grouped by image; each fiber is joined to its
  // first monomial.
  std::vector<ExponentVector> level{ExponentVector(n, 0)};
  std::vector<std::size_t> last{0};  // highest variable index in each monomial
  for (Exponent d = 1; d <= max_degree; ++d) {
    std::vector<ExponentVector> next;
    std::vector<std::size_t> next_last;
    for (std::size_t k = 0; k < level.size(); ++k)
      for (std::size_t j = last[k]; j < n; ++j) {
        ExponentVector m = level[k];
        ++m[j];
        next.push_back(std::move(m));
        next_last.push_back(j);
      }
    level = std::move(next);
    last = std::move(next_last);
    if (d < 2) continue;
    std::map<ExponentVector, std::size_t> first;
    for (std::size_t k = 0; k < level.size(); ++k) {
      auto [it, inserted] = first.emplace(a.image(level[k]), k);
      if (!inserted) out.push_back({level[it->second], level[k], Side::Plus});
    }
  }
  return out;
}

GroebnerBasis toric_groebner(const Configuration& a, const MonomialOrder& order, const ToricOptions& options) {
  const std::size_t n = a.columns.size();
  if (order.size() != n) throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                                     " variables, configuration has " + std::to_string(n));
  if (!a.grading && !check_configuration(a.columns))
    throw std::invalid_argument("toric_groebner needs a graded configuration");

  GroebnerBasis result;
  result.certificate = order;
  result.reduced = true;
  std::vector<MarkedBinomial> gens = lattice_generators(a);
  if (gens.empty()) return result;
  // Low-degree relations found by brute force lie in I_A and keep the
  // intermediate ideals close to saturated, which makes the passes cheap.
  const double cubic_count = static_cast<double>(n) * (n + 1) * (n + 2) / 6;
  auto fibers = fiber_generators(a, cubic_count <= 2e5 ? 3 : 2);
  gens.insert(gens.begin(), fibers.begin(), fibers.end());

  // Every binomial in play is homogeneous in the standard grading (w . a_j = 1
  // for all j), so with x_i of weight zero a lead divisible by x_i forces the
  // tail to be divisible too, and dividing out x_i saturates.
  BuchbergerOptions opts;
  opts.degree_cap = options.degree_cap;
  opts.saturated.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> w(n, 1);
    w[i] = 0;
    opts.saturated[i] = true;
    gens = binomial_groebner(gens, MonomialOrder::weighted(w), opts);
  }
  result.elements = binomial_groebner(gens, order, opts);
  return result;
}

ExponentVector ideal_normal_form(const ExponentVector& monomial, const GroebnerBasis& g) {
  if (!g.order()) throw std::invalid_argument("normal form needs a basis with an order certificate");
  auto r = marked_reduce(monomial, g);
  if (!r.complete) throw std::runtime_error("reduction budget exhausted");
  return r.normal_form;
}

std::optional<MarkedBinomial> ideal_normal_form(const MarkedBinomial& b, const GroebnerBasis& g) {
  const MonomialOrder* order = g.order();
  if (!order) throw std::invalid_argument("normal form needs a basis with an order certificate");
  return MarkedBinomial::oriented(ideal_normal_form(b.plus, g), ideal_normal_form(b.minus, g), *order);
}

namespace {

struct MemberSearch {
  const std::vector<ExponentVector>& columns;
  std::set<std::pair<ExponentVector, std::size_t>> failed;
  std::vector<std::size_t> chosen;

  // Columns are taken in nondecreasing index order, starting at `from`.
  bool search(const ExponentVector& v, std::size_t from) {
    if (is_zero(v)) return true;
    if (failed.count({v, from})) return false;
    for (std::size_t j = from; j < columns.size(); ++j) {
      const auto& c = columns[j];
      bool fits = true;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (c[i] > v[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(j);
      if (search(subtract(v, c), j)) return true;
      chosen.pop_back();
    }
    failed.insert({v, from});
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> semigroup_member(const ExponentVector& v, const Configuration& a) {
  if (v.size() != a.dim) throw std::invalid_argument("vector length does not match configuration dimension");
  if (!is_nonnegative(v)) return std::nullopt;
  std::optional<std::vector<Rational>> w = a.grading;
  if (!w) w = check_configuration(a.columns);
  if (!w) throw std::invalid_argument("semigroup_member needs a graded configuration");
  Rational k = 0;
  for (std::size_t i = 0; i < v.size(); ++i) k += (*w)[i] * static_cast<long>(v[i]);
  if (k < 0 || k.get_den() != 1) return std::nullopt;
  MemberSearch s{a.columns, {}, {}};
  if (!s.search(v, 0)) return std::nullopt;
  return s.chosen;
}

}  // namespace nestconf

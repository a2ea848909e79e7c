#include "nestconf/normality.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "nestconf/buchberger.h"
#include "nestconf/linalg.h"
#include "nestconf/lp.h"
#include "nestconf/toric.h"

namespace nestconf {

std::optional<ExponentVector> lattice_membership(const ExponentVector& v, const Configuration& a) {
  if (v.size() != a.dim) throw std::invalid_argument("vector length does not match configuration dimension");
  return solve_integer(a.columns, v);
}

bool cone_membership(const ExponentVector& v, const Configuration& a) {
  if (v.size() != a.dim) throw std::invalid_argument("vector length does not match configuration dimension");
  if (a.columns.empty()) return is_zero(v);
  RationalMatrix m(a.dim, std::vector<Rational>(a.columns.size()));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.columns.size(); ++j) m[i][j] = static_cast<long>(a.columns[j][i]);
  std::vector<Rational> b;
  for (Exponent x : v) b.emplace_back(static_cast<long>(x));
  return nonnegative_solution(m, b).has_value();
}

namespace {

using Point = std::vector<long long>;

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (long long x : p) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return x.get_si();
}

// The span of the columns seen through r coordinates on which the projection
// is injective. Candidates are enumerated there; the remaining coordinates and
// the degree follow linearly.
class Slicer {
 public:
  explicit Slicer(const Configuration& a) : a_(a) {
    cols_ = a.deduplicated().columns;
    const std::size_t d = a.dim;
    RationalMatrix t;
    for (const auto& c : cols_) {
      std::vector<Rational> row;
      for (Exponent x : c) row.emplace_back(static_cast<long>(x));
      t.push_back(std::move(row));
    }
    coords_ = row_reduce(t);  // independent coordinates
    r_ = coords_.size();
    for (const auto& c : cols_) {
      Point q;
      for (auto p : coords_) q.push_back(c[p]);
      proj_.push_back(std::move(q));
    }
    // r independent columns
    RationalMatrix m(d, std::vector<Rational>(cols_.size()));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < cols_.size(); ++j) m[i][j] = static_cast<long>(cols_[j][i]);
    const auto basis = row_reduce(m);
    // lift rows: L_i solves B_P^T x = B_i
    RationalMatrix bpt(r_, std::vector<Rational>(r_));
    for (std::size_t c = 0; c < r_; ++c)
      for (std::size_t s = 0; s < r_; ++s) bpt[c][s] = static_cast<long>(cols_[basis[c]][coords_[s]]);
    std::vector<std::vector<Rational>> lift(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> rhs(r_);
      for (std::size_t c = 0; c < r_; ++c) rhs[c] = static_cast<long>(cols_[basis[c]][i]);
      auto x = solve_rational(bpt, rhs);
      if (!x) throw std::logic_error("projection is not injective");
      lift[i] = *x;
    }
    std::vector<Rational> g(r_, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = 0; c < r_; ++c) g[c] += (*a.grading)[i] * lift[i][c];
    Integer den = 1;
    for (const auto& row : lift)
      for (const auto& x : row) den = lcm_int(den, x.get_den());
    Integer gden = 1;
    for (const auto& x : g) gden = lcm_int(gden, x.get_den());
    den_ = to_ll(den);
    gden_ = to_ll(gden);
    lift_.assign(d, Point(r_));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = 0; c < r_; ++c) {
        Rational s = lift[i][c] * Rational(den);
        lift_[i][c] = to_ll(s.get_num());
      }
    for (std::size_t c = 0; c < r_; ++c) {
      Rational s = g[c] * Rational(gden);
      g_.push_back(to_ll(s.get_num()));
    }
    free_ = r_;
    for (std::size_t c = 0; c < r_; ++c)
      if (g_[c] != 0) {
        free_ = c;
        break;
      }
    // projected lattice
    IntegerMatrix rows;
    for (const auto& q : proj_) {
      std::vector<Integer> row;
      for (long long x : q) row.emplace_back(static_cast<long>(x));
      rows.push_back(std::move(row));
    }
    hnf_ = hermite_form(rows);
    compute_facets();
  }

  std::size_t rank() const { return r_; }

  // Calls visit(v) for every lattice point v of the cone with degree k.
  void slice(Exponent k, const std::function<void(const Point& p, const ExponentVector& v)>& visit) const {
    if (r_ == 0) return;
    std::vector<long long> upper(r_, 0);
    for (std::size_t c = 0; c < r_; ++c)
      for (const auto& q : proj_) upper[c] = std::max(upper[c], static_cast<long long>(k) * q[c]);
    Point p(r_, 0);
    ExponentVector v(a_.dim);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t c, long long acc) {
      if (c == r_) {
        // g . p = k * gden
        long long rest = static_cast<long long>(k) * gden_ - acc;
        if (rest % g_[free_] != 0) return;
        long long x = rest / g_[free_];
        if (x < 0 || x > upper[free_]) return;
        p[free_] = x;
        if (!in_cone(p) || !in_lattice(p)) return;
        for (std::size_t i = 0; i < a_.dim; ++i) {
          __int128 s = 0;
          for (std::size_t t = 0; t < r_; ++t) s += static_cast<__int128>(lift_[i][t]) * p[t];
          if (s % den_ != 0 || s < 0) return;
          v[i] = static_cast<Exponent>(s / den_);
        }
        if (!facets_ok_ && !cone_membership(v, a_)) return;
        visit(p, v);
        return;
      }
      if (c == free_) {
        rec(c + 1, acc);
        return;
      }
      for (long long x = 0; x <= upper[c]; ++x) {
        p[c] = x;
        rec(c + 1, acc + g_[c] * x);
      }
      p[c] = 0;
    };
    rec(0, 0);
  }

  const std::vector<Point>& projected_columns() const { return proj_; }

 private:
  bool in_cone(const Point& p) const {
    if (!facets_ok_) return true;
    for (const auto& f : facets_) {
      __int128 s = 0;
      for (std::size_t c = 0; c < r_; ++c) s += static_cast<__int128>(f[c]) * p[c];
      if (s < 0) return false;
    }
    return true;
  }

  bool in_lattice(const Point& p) const {
    std::vector<Integer> y(hnf_.rank);
    for (std::size_t l = 0; l < hnf_.rank; ++l) {
      std::size_t piv = hnf_.pivots[l];
      Integer rhs = static_cast<long>(p[piv]);
      for (std::size_t t = 0; t < l; ++t) rhs -= y[t] * hnf_.echelon[t][piv];
      if (!mpz_divisible_p(rhs.get_mpz_t(), hnf_.echelon[l][piv].get_mpz_t())) return false;
      mpz_divexact(y[l].get_mpz_t(), rhs.get_mpz_t(), hnf_.echelon[l][piv].get_mpz_t());
    }
    for (std::size_t c = 0; c < r_; ++c) {
      Integer s = 0;
      for (std::size_t l = 0; l < hnf_.rank; ++l) s += y[l] * hnf_.echelon[l][c];
      if (s != static_cast<long>(p[c])) return false;
    }
    return true;
  }

  // Facet normals from every independent (r-1)-subset whose hyperplane leaves
  // all generators on one side. Skipped (LP fallback) when there are too many
  // subsets.
  void compute_facets() {
    const std::size_t m = proj_.size();
    if (r_ == 1) {
      facets_.push_back(Point{g_[0] > 0 ? 1 : -1});
      facets_ok_ = true;
      return;
    }
    const std::size_t pick = r_ - 1;
    double subsets = 1;
    for (std::size_t s = 0; s < pick; ++s) subsets = subsets * static_cast<double>(m - s) / static_cast<double>(s + 1);
    if (pick > m || subsets > 3e5) return;
    std::set<Point> normals;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      // kernel of the chosen rows: columns of the transposed system
      std::vector<ExponentVector> columns(r_, ExponentVector(pick));
      for (std::size_t s = 0; s < pick; ++s)
        for (std::size_t c = 0; c < r_; ++c) columns[c][s] = proj_[idx[s]][c];
      auto ker = integer_kernel(columns);
      if (ker.size() == 1) {
        Point nrm(ker[0].begin(), ker[0].end());
        bool pos = false, neg = false;
        for (const auto& q : proj_) {
          __int128 s = 0;
          for (std::size_t c = 0; c < r_; ++c) s += static_cast<__int128>(nrm[c]) * q[c];
          if (s > 0) pos = true;
          if (s < 0) neg = true;
        }
        if (!(pos && neg)) {
          if (neg)
            for (auto& x : nrm) x = -x;
          long long g = 0;
          for (auto x : nrm) g = std::gcd(g, x < 0 ? -x : x);
          if (g > 1)
            for (auto& x : nrm) x /= g;
          normals.insert(nrm);
        }
      }
      // next subset
      std::size_t s = pick;
      while (s > 0 && idx[s - 1] == m - pick + s - 1) --s;
      if (s == 0) break;
      ++idx[s - 1];
      for (std::size_t t = s; t < pick; ++t) idx[t] = idx[t - 1] + 1;
    }
    facets_.assign(normals.begin(), normals.end());
    facets_ok_ = true;
  }

  const Configuration& a_;
  std::vector<ExponentVector> cols_;
  std::vector<std::size_t> coords_;
  std::size_t r_ = 0;
  std::vector<Point> proj_;
  std::vector<Point> lift_;  // d x r, scaled by den_
  long long den_ = 1;
  Point g_;  // degree functional on projected coordinates, scaled by gden_
  long long gden_ = 1;
  std::size_t free_ = 0;  // coordinate solved from the degree equation
  HermiteForm hnf_;
  std::vector<Point> facets_;
  bool facets_ok_ = false;
};

}  // namespace

Exponent default_normality_bound(const Configuration& a) {
  return static_cast<Exponent>(a.dim) * std::max<Exponent>(1, a.max_column_degree());
}

HoleReport find_holes(const Configuration& a, Exponent degree_bound, bool first_only) {
  if (!a.grading) throw std::invalid_argument("find_holes needs a graded configuration");
  HoleReport report;
  report.search_bound = degree_bound;
  if (a.columns.empty()) {
    report.exhaustive = true;
    return report;
  }
  Slicer slicer(a);
  const std::size_t r = slicer.rank();
  report.certifying_bound = std::max<Exponent>(1, static_cast<Exponent>(r) - 1);

  std::unordered_set<Point, PointHash> semigroup, next;
  semigroup.insert(Point(r, 0));  // degree 0
  std::vector<Exponent> holes_in(static_cast<std::size_t>(std::max<Exponent>(degree_bound, 0)) + 1, 0);
  bool stopped = false;
  for (Exponent k = 1; k <= degree_bound && !stopped; ++k) {
    next.clear();
    for (const auto& s : semigroup)
      for (const auto& q : slicer.projected_columns()) {
        Point t = s;
        for (std::size_t c = 0; c < r; ++c) t[c] += q[c];
        next.insert(std::move(t));
      }
    semigroup.swap(next);
    std::vector<Hole> found;
    slicer.slice(k, [&](const Point& p, const ExponentVector& v) {
      if (!semigroup.count(p)) found.push_back({v, k});
    });
    std::sort(found.begin(), found.end(), [](const Hole& x, const Hole& y) { return x.point < y.point; });
    holes_in[static_cast<std::size_t>(k)] = static_cast<Exponent>(found.size());
    for (auto& h : found) {
      report.holes.push_back(std::move(h));
      if (first_only) {
        stopped = true;
        break;
      }
    }
  }
  report.exhaustive = !stopped && report.holes.empty() && degree_bound >= report.certifying_bound;
  if (!first_only && degree_bound >= 1) {
    const Exponent top = (degree_bound + 3) / 4;
    report.pattern_flag = true;
    for (Exponent k = degree_bound - top + 1; k <= degree_bound; ++k)
      if (holes_in[static_cast<std::size_t>(k)] == 0) report.pattern_flag = false;
  }
  return report;
}

std::string to_string(NormalityStatus status) {
  switch (status) {
    case NormalityStatus::Normal: return "Normal";
    case NormalityStatus::NotNormal: return "NotNormal";
    case NormalityStatus::UnknownUpTo: return "UnknownUpTo";
  }
  return "?";
}

std::optional<GroebnerBasis> squarefree_initial_implies_normal(const Configuration& a, const MonomialOrder& order) {
  try {
    GroebnerBasis g = toric_groebner(a, order);
    for (const auto& e : g.elements)
      if (!is_squarefree(e.lead())) return std::nullopt;
    return g;
  } catch (const DegreeCapExceeded&) {
    return std::nullopt;
  }
}

std::vector<MonomialOrder> shortcut_orders(const Configuration& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> by_column(n);
  std::iota(by_column.begin(), by_column.end(), 0);
  std::stable_sort(by_column.begin(), by_column.end(),
                   [&](std::size_t x, std::size_t y) { return a.columns[x] < a.columns[y]; });
  std::vector<std::size_t> reversed(by_column.rbegin(), by_column.rend());
  std::vector<MonomialOrder> out;
  for (const auto& base : {MonomialOrder::graded_revlex(n), MonomialOrder::lex(n)}) {
    out.push_back(base);
    out.push_back(base.with_priority(by_column));
    out.push_back(base.with_priority(reversed));
  }
  return out;
}

NormalityResult is_normal(const Configuration& a, std::optional<Exponent> bound) {
  NormalityResult result;
  const Exponent limit = bound ? *bound : default_normality_bound(a);
  result.bound = limit;
  if (a.columns.empty()) {
    result.status = NormalityStatus::Normal;
    result.method = "hole-search";
    return result;
  }
  for (const auto& order : shortcut_orders(a))
    if (squarefree_initial_implies_normal(a, order)) {
      result.status = NormalityStatus::Normal;
      result.method = "squarefree-initial";
      result.order = order;
      return result;
    }
  result.method = "hole-search";
  // probe the certifying bound without searching
  HoleReport probe = find_holes(a, 0);
  result.certifying_bound = probe.certifying_bound;
  const Exponent searched = std::min(limit, result.certifying_bound);
  HoleReport report = find_holes(a, searched, true);
  result.bound = searched;
  if (!report.holes.empty()) {
    result.status = NormalityStatus::NotNormal;
    result.witness = report.holes.front().point;
  } else if (limit >= result.certifying_bound) {
    result.status = NormalityStatus::Normal;
  } else {
    result.status = NormalityStatus::UnknownUpTo;
  }
  return result;
}

Configuration pure_subring(const Configuration& a, const std::vector<std::size_t>& coordinates) {
  if (coordinates.empty()) throw std::invalid_argument("pure_subring needs at least one coordinate");
  std::vector<bool> inside(a.dim, false);
  for (auto c : coordinates) {
    if (c >= a.dim) throw std::out_of_range("coordinate " + std::to_string(c) + " out of range");
    inside[c] = true;
  }
  std::vector<ExponentVector> cols;
  for (const auto& col : a.columns) {
    bool supported = true;
    for (std::size_t i = 0; i < a.dim; ++i)
      if (!inside[i] && col[i] != 0) supported = false;
    if (!supported) continue;
    ExponentVector r;
    for (auto c : coordinates) r.push_back(col[c]);
    cols.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (!a.names.empty())
    for (auto c : coordinates) names.push_back(a.names[c]);
  if (cols.empty()) {
    Configuration empty;
    empty.dim = coordinates.size();
    empty.names = std::move(names);
    return empty;
  }
  return make_configuration(std::move(cols), std::move(names));
}

namespace {

std::vector<std::size_t> sigma(const NestedConfiguration& n) {
  std::vector<std::size_t> s;
  for (const auto& b : n.inner)
    s.push_back(static_cast<std::size_t>(std::max_element(b.columns.begin(), b.columns.end()) - b.columns.begin()));
  return s;
}

Configuration columns_of(const NestedConfiguration& n, const std::vector<std::size_t>& vars) {
  std::vector<ExponentVector> cols;
  for (auto v : vars) cols.push_back(n.config.columns[v]);
  return make_configuration(std::move(cols));
}

std::size_t vertex_column(const NestedConfiguration& n, std::size_t i) {
  if (i >= n.inner.size()) throw std::out_of_range("letter out of range");
  std::size_t best = 0;
  for (std::size_t k = 1; k < n.outer.columns.size(); ++k)
    if (n.outer.columns[k][i] > n.outer.columns[best][i]) best = k;
  return best;
}

}  // namespace

std::vector<std::size_t> vertex_variables_A(const NestedConfiguration& n) {
  const auto s = sigma(n);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n.outer.columns.size(); ++k) {
    NestedVariable x{k, {}};
    for (std::size_t i = 0; i < n.outer.dim; ++i)
      for (Exponent c = 0; c < n.outer.columns[k][i]; ++c) x.pairs.push_back({i, s[i]});
    out.push_back(n.index_of(x));
  }
  return out;
}

Configuration vertex_subring_A(const NestedConfiguration& n) { return columns_of(n, vertex_variables_A(n)); }

Exponent vertex_exponent_B(const NestedConfiguration& n, std::size_t i) {
  return n.outer.columns[vertex_column(n, i)][i];
}

std::vector<std::size_t> vertex_variables_B(const NestedConfiguration& n, std::size_t i) {
  const std::size_t k = vertex_column(n, i);
  const auto s = sigma(n);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n.size(); ++v) {
    const auto& x = n.variables[v];
    if (x.k != k) continue;
    bool fixed = true;
    for (const auto& p : x.pairs)
      if (p.i != i && p.j != s[p.i]) fixed = false;
    if (fixed) out.push_back(v);
  }
  return out;
}

Configuration vertex_subring_B(const NestedConfiguration& n, std::size_t i) {
  return columns_of(n, vertex_variables_B(n, i));
}

}  // namespace nestconf

#include "nestconf/lp.h"

#include <algorithm>
#include <stdexcept>

namespace nestconf {

namespace {

struct PhaseOne {
  std::optional<std::vector<Rational>> x;
  // simplex multipliers of the final basis; pi . b is the optimal infeasibility
  std::vector<Rational> pi;
};

PhaseOne phase_one(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("nonnegative_solution: row count mismatch");
  const std::size_t n = m ? a.front().size() : 0;
  if (m == 0) return {std::vector<Rational>(n, 0), {}};

  // Tableau columns: x (n), artificials (m), rhs.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimize sum of artificials".
  std::vector<Rational> cost(width, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == n + m) cost[j] -= t[i][j];

  // Dantzig pricing; after a run of degenerate pivots switch to Bland's rule
  // until the objective moves, which rules out cycling.
  constexpr std::size_t kDegenerateRun = 50;
  std::size_t degenerate = 0;
  std::vector<std::size_t> support;
  while (true) {
    std::size_t enter = width;
    const bool bland = degenerate >= kDegenerateRun;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] >= 0) continue;
      if (enter == width || (!bland && cost[j] < cost[enter])) enter = j;
      if (bland) break;
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a bounded phase-one objective
    degenerate = best_ratio == 0 ? degenerate + 1 : 0;
    Rational inv = 1 / t[leave][enter];
    support.clear();
    for (std::size_t j = 0; j < width; ++j)
      if (t[leave][j] != 0) {
        t[leave][j] *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (auto j : support) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (auto j : support) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  PhaseOne out;
  // reduced cost of artificial i is 1 - pi_i (rows with b_i < 0 were negated)
  out.pi.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.pi[i] = 1 - cost[n + i];
    if (b[i] < 0) out.pi[i] = -out.pi[i];
  }
  if (cost[n + m] != 0) return out;  // optimum sum of artificials is -cost[rhs]
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  out.x = std::move(x);
  return out;
}

Rational dot(const ExponentVector& row, const std::vector<Rational>& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += static_cast<long>(row[i]) * w[i];
  return s;
}

}  // namespace

std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b) {
  return phase_one(a, b).x;
}

std::optional<std::vector<Rational>> strictly_positive_weight(const std::vector<ExponentVector>& rows) {
  if (rows.empty()) return std::vector<Rational>{};
  const std::size_t n = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("weight rows have different lengths");
    if (is_zero(r)) return std::nullopt;
  }
  // Farkas system: y, s >= 0 with sum_i y_i row_i + s = 0 and sum_i y_i = 1.
  // It is feasible iff no weight exists; otherwise its phase-one multipliers
  // (w, t) satisfy row . w + t >= 0, w >= 0, t < 0.
  std::vector<ExponentVector> distinct = rows;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t m = distinct.size();
  RationalMatrix a(n + 1, std::vector<Rational>(m + n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v = 0; v < n; ++v)
      if (distinct[i][v] != 0) a[v][i] = static_cast<long>(distinct[i][v]);
    a[n][i] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) a[v][m + v] = 1;
  std::vector<Rational> b(n + 1, 0);
  b[n] = 1;
  PhaseOne p = phase_one(a, b);
  if (p.x) return std::nullopt;
  const Rational t = -p.pi[n];
  std::vector<Rational> w(n);
  for (std::size_t v = 0; v < n; ++v) w[v] = p.pi[v] / t;
  bool ok = true;
  for (auto& x : w)
    if (x < 0) ok = false;
  for (const auto& r : distinct)
    if (ok && dot(r, w) < 1) ok = false;
  if (!ok) throw std::logic_error("weight LP returned an invalid certificate");
  return w;
}

}  // namespace nestconf

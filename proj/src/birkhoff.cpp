#include "nestconf/birkhoff.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace nestconf {

ExponentVector SquareMatrixPoint::row_sums() const {
  ExponentVector s(size, 0);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) s[r] += at(r, c);
  return s;
}

ExponentVector SquareMatrixPoint::column_sums() const {
  ExponentVector s(size, 0);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) s[c] += at(r, c);
  return s;
}

std::vector<SquareMatrixPoint> permutation_matrices(std::size_t p) {
  if (p == 0) throw std::invalid_argument("permutation size must be positive");
  std::vector<std::size_t> word(p);
  for (std::size_t i = 0; i < p; ++i) word[i] = i;
  std::vector<SquareMatrixPoint> even, odd;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b)
        if (word[a] > word[b]) ++inversions;
    SquareMatrixPoint m{p, ExponentVector(p * p, 0)};
    for (std::size_t r = 0; r < p; ++r) m.entries[r * p + word[r]] = 1;
    (inversions % 2 == 0 ? even : odd).push_back(std::move(m));
  } while (std::next_permutation(word.begin(), word.end()));
  even.insert(even.end(), odd.begin(), odd.end());
  return even;
}

Configuration permutation_configuration(std::size_t p) {
  std::vector<ExponentVector> cols;
  for (auto& m : permutation_matrices(p)) cols.push_back(std::move(m.entries));
  return make_configuration(std::move(cols));
}

std::vector<SquareMatrixPoint> birkhoff_multiple_points(std::size_t n, std::size_t p) {
  const auto perms = permutation_matrices(p);
  std::vector<SquareMatrixPoint> out;
  std::set<ExponentVector> seen;
  std::vector<std::size_t> seq;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (seq.size() == n) {
      SquareMatrixPoint m{p, ExponentVector(p * p, 0)};
      for (auto s : seq) m.entries = add(m.entries, perms[s].entries);
      if (seen.insert(m.entries).second) out.push_back(std::move(m));
      return;
    }
    for (std::size_t s = from; s < perms.size(); ++s) {
      seq.push_back(s);
      rec(s);
      seq.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<SquareMatrixPoint> transportation_points(const ExponentVector& r, const ExponentVector& c) {
  if (r.size() != 3 || c.size() != 3) throw std::invalid_argument("margins must have three entries");
  if (!is_nonnegative(r) || !is_nonnegative(c)) throw std::invalid_argument("margins must be nonnegative");
  if (total_degree(r) != total_degree(c)) throw std::invalid_argument("row and column totals differ");
  std::vector<SquareMatrixPoint> out;
  SquareMatrixPoint m{3, ExponentVector(9, 0)};
  ExponentVector row_left = r, col_left = c;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == 9) {
      if (is_zero(row_left) && is_zero(col_left)) out.push_back(m);
      return;
    }
    const std::size_t row = pos / 3, col = pos % 3;
    Exponent hi = std::min(row_left[row], col_left[col]);
    Exponent lo = 0;
    if (col == 2) lo = row_left[row];  // the row must close
    if (row == 2) lo = std::max(lo, col_left[col]);
    for (Exponent v = lo; v <= hi; ++v) {
      m.entries[pos] = v;
      row_left[row] -= v;
      col_left[col] -= v;
      rec(pos + 1);
      row_left[row] += v;
      col_left[col] += v;
    }
    m.entries[pos] = 0;
  };
  rec(0);
  return out;
}

NestedConfiguration birkhoff_nested(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  Configuration outer = make_configuration({ExponentVector{static_cast<Exponent>(n)}});
  return build_nested(outer, {permutation_configuration(3)});
}

std::vector<MarkedBinomial> birkhoff_linear_relations(std::size_t n) {
  NestedConfiguration nc = birkhoff_nested(n);
  std::vector<MarkedBinomial> out;
  for (std::size_t v = 0; v < nc.size(); ++v) {
    std::multiset<std::size_t> letters;
    for (const auto& p : nc.variables[v].pairs) letters.insert(p.j);
    if (!letters.count(0) || !letters.count(1) || !letters.count(2)) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      letters.erase(letters.find(j));
      letters.insert(j + 3);
    }
    NestedVariable w{0, {}};
    for (auto j : letters) w.pairs.push_back({0, j});
    out.push_back(MarkedBinomial::make(unit_vector(nc.size(), v), unit_vector(nc.size(), nc.index_of(w))));
  }
  canonicalize(out);
  return out;
}

BirkhoffReport birkhoff_pipeline(std::size_t n, const VerifyOptions& options, bool check_variable_presentation) {
  BirkhoffReport report;
  report.n = n;
  NestedConfiguration nc = birkhoff_nested(n);
  Configuration points = nc.point_configuration();
  report.variables = nc.size();
  report.points = points.size();
  report.family = family_birkhoff(n);

  std::map<ExponentVector, std::size_t> point_index;
  for (std::size_t p = 0; p < points.size(); ++p) point_index.emplace(points.columns[p], p);
  std::vector<std::size_t> to_point(nc.size());
  for (std::size_t v = 0; v < nc.size(); ++v) to_point[v] = point_index.at(nc.config.columns[v]);
  auto move = [&](const ExponentVector& m) {
    ExponentVector out(points.size(), 0);
    for (std::size_t v = 0; v < m.size(); ++v) out[to_point[v]] += m[v];
    return out;
  };

  std::vector<MarkedBinomial> moved;
  for (const auto& b : report.family.binomials) {
    MarkedBinomial c{move(b.lead()), move(b.tail()), Side::Plus};
    if (c.plus != c.minus) moved.push_back(std::move(c));
  }
  canonicalize(moved);
  std::set<ExponentVector> leads;
  for (auto& b : moved)
    if (leads.insert(b.plus).second) report.point_family.push_back(std::move(b));

  report.stats = degree_stats(report.point_family);
  report.verdict = verify_marked_gb(report.point_family, points, options);
  if (check_variable_presentation && report.variables != report.points)
    report.variable_verdict = verify_marked_gb(report.family.binomials, nc.config, options);
  return report;
}

}  // namespace nestconf

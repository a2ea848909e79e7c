#include "nestconf/linalg.h"

#include <algorithm>
#include <stdexcept>

namespace nestconf {

namespace {

Exponent to_exponent(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer entry does not fit an exponent");
  return z.get_si();
}

void add_row_multiple(std::vector<Integer>& target, const std::vector<Integer>& source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < target.size(); ++c)
    if (source[c] != 0) target[c] += factor * source[c];
}

Exponent norm1(const ExponentVector& v) {
  Exponent s = 0;
  for (Exponent e : v) s = checked_add(s, e < 0 ? -e : e);
  return s;
}

// Greedy pairwise reduction: replace b_i by b_i +- b_j while the 1-norm drops.
void size_reduce(std::vector<ExponentVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int sign : {-1, 1}) {
          ExponentVector candidate = basis[i];
          for (std::size_t c = 0; c < candidate.size(); ++c)
            candidate[c] = checked_add(candidate[c], sign * basis[j][c]);
          if (norm1(candidate) < norm1(basis[i])) {
            basis[i] = std::move(candidate);
            changed = true;
          }
        }
      }
    }
  }
}

}  // namespace

HermiteForm hermite_form(IntegerMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  HermiteForm h;
  h.transform.assign(rows, std::vector<Integer>(rows, 0));
  for (std::size_t r = 0; r < rows; ++r) h.transform[r][r] = 1;

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    // Euclid on column c among rows [pivot_row, rows).
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r)
        if (a[r][c] != 0 && (best == rows || abs(a[r][c]) < abs(a[best][c]))) best = r;
      if (best == rows) break;
      std::swap(a[best], a[pivot_row]);
      std::swap(h.transform[best], h.transform[pivot_row]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[pivot_row][c].get_mpz_t());
        Integer neg = -q;
        add_row_multiple(a[r], a[pivot_row], neg);
        add_row_multiple(h.transform[r], h.transform[pivot_row], neg);
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[pivot_row][c] == 0) continue;
    if (a[pivot_row][c] < 0) {
      for (auto& x : a[pivot_row]) x = -x;
      for (auto& x : h.transform[pivot_row]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[pivot_row][c].get_mpz_t());
      Integer neg = -q;
      add_row_multiple(a[r], a[pivot_row], neg);
      add_row_multiple(h.transform[r], h.transform[pivot_row], neg);
    }
    h.pivots.push_back(c);
    ++pivot_row;
  }
  h.rank = pivot_row;
  h.echelon = std::move(a);
  return h;
}

namespace {

// Rows of the transposed column matrix: row j = columns[j].
IntegerMatrix transposed(const std::vector<ExponentVector>& columns) {
  IntegerMatrix m;
  for (const auto& col : columns) {
    std::vector<Integer> row;
    for (Exponent e : col) row.emplace_back(static_cast<long>(e));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.size();
  for (const auto& c : columns) require_same_length(c, columns.front());
  HermiteForm h = hermite_form(transposed(columns));
  std::vector<ExponentVector> basis;
  for (std::size_t r = h.rank; r < n; ++r) {
    ExponentVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = to_exponent(h.transform[r][c]);
    basis.push_back(std::move(v));
  }
  size_reduce(basis);
  return basis;
}

std::optional<ExponentVector> solve_integer(const std::vector<ExponentVector>& columns, const ExponentVector& v) {
  const std::size_t d = v.size();
  if (columns.empty()) {
    if (is_zero(v)) return ExponentVector{};
    return std::nullopt;
  }
  for (const auto& c : columns) require_same_length(c, v);
  // transform * M^T = H, so M = H^T * transform^{-T}; solve H^T y = v, then c = transform^T y.
  HermiteForm h = hermite_form(transposed(columns));
  std::vector<Integer> y(h.rank);
  for (std::size_t l = 0; l < h.rank; ++l) {
    std::size_t p = h.pivots[l];
    Integer rhs = static_cast<long>(v[p]);
    for (std::size_t k = 0; k < l; ++k) rhs -= y[k] * h.echelon[k][p];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h.echelon[l][p].get_mpz_t())) return std::nullopt;
    mpz_divexact(y[l].get_mpz_t(), rhs.get_mpz_t(), h.echelon[l][p].get_mpz_t());
  }
  for (std::size_t i = 0; i < d; ++i) {
    Integer s = 0;
    for (std::size_t l = 0; l < h.rank; ++l) s += y[l] * h.echelon[l][i];
    if (s != static_cast<long>(v[i])) return std::nullopt;
  }
  ExponentVector c(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Integer s = 0;
    for (std::size_t l = 0; l < h.rank; ++l) s += y[l] * h.transform[l][j];
    c[j] = to_exponent(s);
  }
  return c;
}

std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_rational: row count mismatch");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::size_t rank_of(const std::vector<ExponentVector>& columns) {
  RationalMatrix m;
  for (const auto& c : columns) {
    std::vector<Rational> row;
    for (Exponent e : c) row.emplace_back(static_cast<long>(e));
    m.push_back(std::move(row));
  }
  return row_reduce(m).size();
}

}  // namespace nestconf

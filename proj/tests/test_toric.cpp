#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "nestconf/toric.h"

using namespace nestconf;

namespace {

// Six 3x3 permutation matrices, flattened row-major: even permutations in
// lexicographic order, then odd ones.
Configuration permutation_config() {
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  std::vector<ExponentVector> cols;
  for (const auto& p : perms) {
    ExponentVector c(9, 0);
    for (int i = 0; i < 3; ++i) c[3 * i + p[i]] = 1;
    cols.push_back(c);
  }
  return make_configuration(cols);
}

void enumerate(std::size_t n, Exponent deg, ExponentVector& cur, std::size_t pos, std::vector<ExponentVector>& out) {
  if (pos + 1 == n) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (Exponent e = 0; e <= deg; ++e) {
    cur[pos] = e;
    enumerate(n, deg - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, Exponent deg) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n, 0);
  enumerate(n, deg, cur, 0, out);
  return out;
}

// Brute force: in every degree up to `top`, standard monomials are in
// bijection with the distinct images, and monomials with equal images share a
// normal form.
void check_against_brute_force(const Configuration& a, const GroebnerBasis& g, Exponent top) {
  for (Exponent d = 1; d <= top; ++d) {
    std::map<ExponentVector, ExponentVector> nf_of_image;
    std::set<ExponentVector> standard;
    for (const auto& m : monomials_of_degree(a.size(), d)) {
      auto nf = ideal_normal_form(m, g);
      auto img = a.image(m);
      CHECK(a.image(nf) == img);
      auto [it, inserted] = nf_of_image.emplace(img, nf);
      if (!inserted) CHECK(it->second == nf);
      standard.insert(nf);
    }
    CHECK(standard.size() == nf_of_image.size());
  }
}

}  // namespace

TEST_CASE("permutation matrices give a principal ideal") {
  auto a = permutation_config();
  auto g = toric_groebner(a, MonomialOrder::graded_revlex(6));
  REQUIRE(g.elements.size() == 1);
  CHECK(g.elements[0] == MarkedBinomial::make({1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}));
  CHECK_FALSE(ideal_normal_form(g.elements[0], g));
  check_against_brute_force(a, g, 4);
}

TEST_CASE("conic and independent monomials") {
  auto conic = make_configuration({{2, 0}, {1, 1}, {0, 2}});
  auto g = toric_groebner(conic, MonomialOrder::graded_revlex(3));
  REQUIRE(g.elements.size() == 1);
  CHECK(g.elements[0] == MarkedBinomial::make({0, 2, 0}, {1, 0, 1}));
  auto indep = make_configuration({{2, 1}, {1, 2}});
  CHECK(toric_groebner(indep, MonomialOrder::graded_revlex(2)).elements.empty());
  // a variable is its own normal form
  CHECK(ideal_normal_form(ExponentVector{0, 1, 0}, g) == ExponentVector{0, 1, 0});
}

TEST_CASE("saturation is needed for the twisted cubic under lex") {
  // The kernel lattice basis alone does not generate the ideal here.
  auto cubic = make_configuration({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  for (auto order : {MonomialOrder::lex(4), MonomialOrder::graded_revlex(4), MonomialOrder::graded_lex(4)}) {
    auto g = toric_groebner(cubic, order);
    for (const auto& b : g.elements) {
      CHECK(cubic.image(b.plus) == cubic.image(b.minus));
      CHECK(total_degree(b.plus) == total_degree(b.minus));
    }
    check_against_brute_force(cubic, g, 5);
  }
  auto g = toric_groebner(cubic, MonomialOrder::graded_revlex(4));
  CHECK(g.elements.size() == 3);
}

TEST_CASE("reduced basis does not depend on column order") {
  auto a = make_configuration({{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  auto g = toric_groebner(a, MonomialOrder::graded_revlex(6));
  check_against_brute_force(a, g, 3);
  std::vector<std::size_t> perm{3, 0, 5, 1, 4, 2};
  Configuration b = a;
  for (std::size_t j = 0; j < 6; ++j) b.columns[j] = a.columns[perm[j]];
  // the same order on relabelled variables
  std::vector<std::size_t> priority(6);
  for (std::size_t j = 0; j < 6; ++j) priority[j] = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), j) - perm.begin());
  auto h = toric_groebner(b, MonomialOrder::graded_revlex(6).with_priority(priority));
  std::vector<MarkedBinomial> mapped;
  for (const auto& e : h.elements) {
    ExponentVector p(6), m(6);
    for (std::size_t j = 0; j < 6; ++j) {
      p[perm[j]] = e.plus[j];
      m[perm[j]] = e.minus[j];
    }
    mapped.push_back({p, m, Side::Plus});
  }
  canonicalize(mapped);
  CHECK(mapped == g.elements);
}

TEST_CASE("degree cap aborts") {
  auto a = make_configuration({{5, 0}, {0, 5}, {2, 3}});
  ToricOptions opts;
  opts.degree_cap = 3;
  CHECK_THROWS_AS(toric_groebner(a, MonomialOrder::graded_revlex(3), opts), DegreeCapExceeded);
  CHECK(toric_groebner(a, MonomialOrder::graded_revlex(3)).max_degree() == 5);
}

TEST_CASE("normal form needs an order certificate") {
  GroebnerBasis g;
  g.elements = {MarkedBinomial::make({0, 2, 0}, {1, 0, 1})};
  CHECK_THROWS_AS(ideal_normal_form(ExponentVector{0, 2, 0}, g), std::invalid_argument);
}

TEST_CASE("semigroup membership") {
  auto b = make_configuration({{0, 1}, {1, 1}, {3, 1}, {4, 1}});
  auto one = semigroup_member({3, 1}, b);
  REQUIRE(one);
  CHECK(*one == std::vector<std::size_t>{2});
  CHECK_FALSE(semigroup_member({2, 1}, b));
  auto two = semigroup_member({4, 2}, b);
  REQUIRE(two);
  ExponentVector sum{0, 0};
  for (auto j : *two) sum = add(sum, b.columns[j]);
  CHECK(sum == ExponentVector{4, 2});
  CHECK_FALSE(semigroup_member({1, 0}, b));  // degree not an integer
  CHECK_FALSE(semigroup_member({-1, 2}, b));
}

#include <set>

#include "doctest.h"
#include "nestconf/birkhoff.h"

using namespace nestconf;

namespace {

std::set<ExponentVector> entries(const std::vector<SquareMatrixPoint>& pts) {
  std::set<ExponentVector> s;
  for (const auto& p : pts) s.insert(p.entries);
  return s;
}

}  // namespace

TEST_CASE("permutation matrices") {
  auto p3 = permutation_matrices(3);
  REQUIRE(p3.size() == 6);
  // sigma_1..sigma_6: identity, (231), (312), (132), (213), (321)
  const std::size_t words[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  for (int s = 0; s < 6; ++s)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(p3[s].at(r, c) == (words[s][r] == c ? 1 : 0));
  CHECK(permutation_matrices(1).size() == 1);
  CHECK(permutation_matrices(1)[0].entries == ExponentVector{1});
  CHECK(permutation_matrices(2).size() == 2);
  CHECK(permutation_matrices(4).size() == 24);
  CHECK_THROWS_AS(permutation_matrices(0), std::invalid_argument);
}

TEST_CASE("sums of permutations are the doubly stochastic points") {
  const std::size_t expected[] = {0, 6, 21, 55, 120};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto pts = birkhoff_multiple_points(n);
    const Exponent m = static_cast<Exponent>(n);
    auto oracle = transportation_points({m, m, m}, {m, m, m});
    CHECK(pts.size() == expected[n]);
    CHECK(oracle.size() == expected[n]);
    CHECK(entries(pts) == entries(oracle));
    for (const auto& p : pts) {
      CHECK(p.row_sums() == ExponentVector{m, m, m});
      CHECK(p.column_sums() == ExponentVector{m, m, m});
    }
  }
}

TEST_CASE("transportation points") {
  auto b3 = transportation_points({1, 1, 1}, {1, 1, 1});
  CHECK(entries(b3) == entries(permutation_matrices(3)));
  CHECK(transportation_points({1, 0, 0}, {1, 0, 0}).size() == 1);
  CHECK(transportation_points({0, 0, 0}, {0, 0, 0}).size() == 1);
  CHECK_THROWS_AS(transportation_points({1, 1, 1}, {1, 1, 0}), std::invalid_argument);
  for (Exponent a = 0; a <= 3; ++a)
    for (Exponent b = 0; b <= 3; ++b) {
      ExponentVector r{a, b, 2}, c{2, b, a};
      auto pts = transportation_points(r, c);
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      for (const auto& p : pts) {
        CHECK(p.row_sums() == r);
        CHECK(p.column_sums() == c);
      }
    }
}

TEST_CASE("birkhoff nested configurations") {
  CHECK(birkhoff_nested(1).size() == 6);
  auto two = birkhoff_nested(2);
  CHECK(two.size() == 21);
  CHECK(entries(birkhoff_multiple_points(2)) == std::set<ExponentVector>(two.config.columns.begin(), two.config.columns.end()));
  auto three = birkhoff_nested(3);
  CHECK(three.size() == 56);
  CHECK(three.point_configuration().size() == 55);
  auto a = three.index_of(NestedVariable{0, {{0, 0}, {0, 1}, {0, 2}}});
  auto b = three.index_of(NestedVariable{0, {{0, 3}, {0, 4}, {0, 5}}});
  CHECK(three.config.columns[a] == three.config.columns[b]);
  CHECK(three.config.columns[a] == ExponentVector(9, 1));
  CHECK(three.point_configuration().columns == three.config.deduplicated().columns);
  // first-occurrence order of points follows the variable order
  std::vector<ExponentVector> pts;
  for (const auto& p : birkhoff_multiple_points(3)) pts.push_back(p.entries);
  CHECK(pts == three.point_configuration().columns);
}

TEST_CASE("pipeline n = 1, 2") {
  auto one = birkhoff_pipeline(1);
  CHECK(one.verdict.status == VerdictStatus::CertifiedGB);
  CHECK(one.point_family.size() == 1);
  CHECK(one.stats.max_degree == 3);

  auto two = birkhoff_pipeline(2);
  CHECK(two.variables == 21);
  CHECK(two.points == 21);
  CHECK(two.verdict.status == VerdictStatus::CertifiedGB);
  CHECK(two.stats.is_quadratic);
  CHECK(two.stats.max_degree == 2);
  CHECK_FALSE(two.variable_verdict.has_value());
  CHECK(two.point_family == two.family.binomials);
}

TEST_CASE("linear relations of the variable list") {
  CHECK(birkhoff_linear_relations(2).empty());
  auto three = birkhoff_linear_relations(3);
  REQUIRE(three.size() == 1);
  auto n3 = birkhoff_nested(3);
  CHECK(display_binomial(n3, three[0]) == "x[1|(1,1)(1,2)(1,3)] - x[1|(1,4)(1,5)(1,6)]");
  // one per context letter
  auto four = birkhoff_linear_relations(4);
  CHECK(four.size() == 6);
  auto n4 = birkhoff_nested(4);
  for (const auto& b : four) CHECK(n4.config.image(b.lead()) == n4.config.image(b.tail()));
}

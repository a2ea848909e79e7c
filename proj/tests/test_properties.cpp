#include <set>

#include "doctest.h"
#include "nestconf/properties.h"
#include "nestconf/toric.h"

using namespace nestconf;

TEST_CASE("random configurations") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto a = random_configuration(rng, 3, 2, 4);
    CHECK(a.dim == 3);
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 4);
    std::set<ExponentVector> distinct(a.columns.begin(), a.columns.end());
    CHECK(distinct.size() == a.size());
    for (const auto& c : a.columns) CHECK(total_degree(c) == 2);
  }
  // at most 3 monomials of degree 1 in 3 variables
  CHECK(random_configuration(rng, 3, 1, 10).size() == 3);
}

TEST_CASE("random instances respect the shape") {
  std::mt19937_64 rng(2);
  InstanceShape shape;
  for (int t = 0; t < 200; ++t) {
    auto inst = random_instance(rng, shape);
    CHECK(inst.outer.dim <= shape.max_outer_dim);
    CHECK(inst.inner.size() == inst.outer.dim);
    CHECK(inst.outer.size() <= shape.max_outer_columns);
    for (const auto& b : inst.inner) {
      CHECK(b.dim <= shape.max_inner_dim);
      CHECK(b.size() <= shape.max_inner_columns);
    }
  }
}

TEST_CASE("suites are reproducible") {
  InstanceShape shape;
  std::mt19937_64 a(9), b(9);
  auto x = run_maincase_suite(a, shape, 5);
  auto y = run_maincase_suite(b, shape, 5);
  CHECK(x.pass == y.pass);
  CHECK(x.skip == y.skip);
  CHECK(x.pass == 5);
  CHECK(a() == b());
}

TEST_CASE("maincase skips") {
  InstanceShape shape;
  // the Segre product of two lines has a nonzero ideal
  RandomInstance segre{make_configuration({{1, 1}}), {make_configuration({{1, 0}, {0, 1}}),
                                                      make_configuration({{1, 0}, {0, 1}})}};
  auto c = check_maincase(segre, shape);
  CHECK(c.outcome == CaseOutcome::Pass);
  CHECK(c.witness == 2);
  CHECK(c.equality_applies);
  RandomInstance zero{make_configuration({{1}}), {make_configuration({{1, 0}, {0, 1}})}};
  CHECK(check_maincase(zero, shape).note == "zero ideal");
  shape.max_variables = 2;
  CHECK(check_maincase(segre, shape).note == "too many variables");
}

TEST_CASE("sort_split and membership checks") {
  std::mt19937_64 rng(4);
  auto n = build_nested(make_configuration({{2, 0}, {1, 1}}), {make_configuration({{2, 0}, {1, 1}, {0, 2}}),
                                                                make_configuration({{2, 1}, {1, 2}})});
  for (int t = 0; t < 200; ++t) CHECK(check_sort_split(n, rng).empty());
  auto order = [](std::size_t k) { return MonomialOrder::graded_revlex(k); };
  auto g = toric_groebner(n.config, order(n.size()));
  auto g0 = toric_groebner(n.outer, order(n.outer.size()));
  std::vector<GroebnerBasis> gi;
  for (const auto& b : n.inner) gi.push_back(toric_groebner(b, order(b.size())));
  std::size_t members = 0;
  for (int t = 0; t < 300; ++t) {
    auto m = check_membership(n, g, g0, gi, rng);
    CHECK(m.failure.empty());
    members += m.member;
  }
  CHECK(members > 50);
  CHECK(members < 300);
}

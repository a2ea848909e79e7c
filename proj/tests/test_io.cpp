#include <set>

#include "doctest.h"
#include "nestconf/birkhoff.h"
#include "nestconf/families.h"
#include "nestconf/io.h"
#include "nestconf/toric.h"

using namespace nestconf;

namespace {

const std::string data_dir = NESTCONF_TEST_DATA;

std::string data(const std::string& name) { return data_dir + "/" + name; }

}  // namespace

TEST_CASE("configuration files round-trip") {
  for (const char* name : {"pair_A.cfg", "pair_B1.cfg", "pair_B2.cfg", "pair_golden.cfg", "gap.cfg", "gap_w.cfg",
                           "square.cfg", "b3.cfg", "simplex.cfg"}) {
    CAPTURE(name);
    const std::string text = read_file(data(name));
    Configuration a = parse_configuration(text, name);
    CHECK(format_configuration(a) == text);
    Configuration b = parse_configuration(format_configuration(a));
    CHECK(b.columns == a.columns);
    CHECK(b.names == a.names);
  }
}

TEST_CASE("b3 file is the permutation configuration") {
  CHECK(read_configuration_file(data("b3.cfg")).columns == permutation_configuration(3).columns);
}

TEST_CASE("configuration parse errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_configuration(text, "f");
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    FAIL("no error");
    return {0, 0};
  };
  CHECK(error_at("2 x\n1 0\n0 1\n") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(error_at("# c\n2 2\n1 0\n0 1 5\n") == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(error_at("2 2\n1 0\n0 -1\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(error_at("2 2\n1 0\n").first == 2);
  CHECK(error_at("").first == 1);
  CHECK(error_at("1\n").first == 1);
  // not graded: no w with w.a = 1 for 1 and 2
  CHECK(error_at("1 2\n1 2\n").first == 1);
  try {
    parse_configuration("2 x\n", "bad.cfg");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("bad.cfg:1:3:", 0) == 0);
  }
}

TEST_CASE("binomial files round-trip on nested names") {
  auto n = birkhoff_nested(2);
  auto names = nested_names(n);
  Family f = family_birkhoff(2);
  const std::string text = format_binomials(f.binomials, names);
  auto back = parse_binomials(text, names);
  CHECK(back == f.binomials);
  CHECK(format_binomials(back, names) == text);
}

TEST_CASE("binomial syntax") {
  auto names = plain_names(3);
  auto fam = parse_binomials("# comment\nz1^2*z3 - z2  # trailing\n\nz2 - 1\n", names);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].lead() == ExponentVector{2, 0, 1});
  CHECK(fam[0].tail() == ExponentVector{0, 1, 0});
  CHECK(fam[1].tail() == ExponentVector{0, 0, 0});
  CHECK(format_monomial({2, 0, 1}, names) == "z1^2*z3");
  CHECK(format_monomial({0, 0, 0}, names) == "1");
  // repeated factors add up
  CHECK(parse_binomials("z1*z1 - z2^2\n", names)[0].lead() == ExponentVector{2, 0, 0});

  auto column_of = [&](const std::string& text) -> std::size_t {
    try {
      parse_binomials(text, names, "g");
    } catch (const ParseError& e) {
      return e.column();
    }
    FAIL("no error");
    return 0;
  };
  CHECK(column_of("z1 - z4\n") == 6);
  CHECK(column_of("z1 z2\n") == 4);
  CHECK(column_of("z1 - z2 z3\n") == 9);
  CHECK(column_of("z1^ - z2\n") == 4);
  CHECK(column_of("z1* - z2\n") == 5);
  CHECK_THROWS_AS(parse_binomials("z1 - z1\n", names), ParseError);
}

TEST_CASE("order names") {
  CHECK(parse_order("lex", 3) == MonomialOrder::lex(3));
  CHECK(parse_order("grlex", 3) == MonomialOrder::graded_lex(3));
  CHECK(parse_order("grevlex", 3) == MonomialOrder::graded_revlex(3));
  auto w = parse_order("weight:1,1/2,0", 3);
  CHECK(w.kind() == OrderKind::Weight);
  CHECK(w.weights() == std::vector<Rational>{1, Rational(1, 2), 0});
  CHECK_THROWS_AS(parse_order("weight:1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_order("weight:1,-1,0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_order("weight:1,a,0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_order("revlex", 3), std::invalid_argument);
}

TEST_CASE("nested spec files") {
  auto n = read_nested_spec_file(data("pair.nest"));
  CHECK(n.size() == 12);
  auto golden = read_configuration_file(data("pair_golden.cfg"));
  auto points = n.point_configuration();
  std::multiset<ExponentVector> got(points.columns.begin(), points.columns.end()),
      want(golden.columns.begin(), golden.columns.end());
  CHECK(got == want);
  CHECK_THROWS_AS(parse_nested_spec("inner: b.cfg\n"), ParseError);
  CHECK_THROWS_AS(parse_nested_spec("outer: a.cfg\n"), ParseError);
  CHECK_THROWS_AS(parse_nested_spec("outer: a.cfg\nside: b.cfg\n"), ParseError);
}

TEST_CASE("hole report text") {
  auto a = read_configuration_file(data("gap.cfg"));
  auto text = format_hole_report(find_holes(a, 3));
  CHECK(text == "holes=1 search_bound=3 certifying_bound=1 exhaustive=0 pattern=0\n1: (2,1)\n");
}

TEST_CASE("points text") {
  CHECK(format_points(birkhoff_multiple_points(1)).substr(0, 18) == "1 0 0 0 1 0 0 0 1\n");
}

#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "nestconf/exponent.h"

using namespace nestconf;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(-big, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
}

TEST_CASE("monomial divisibility, lcm and gcd") {
  ExponentVector a{1, 0, 2}, b{2, 1, 2};
  CHECK(divides(a, b));
  CHECK_FALSE(divides(b, a));
  CHECK(lcm(a, ExponentVector{0, 3, 1}) == ExponentVector{1, 3, 2});
  CHECK(gcd(a, b) == a);
  CHECK(coprime(ExponentVector{1, 0, 0}, ExponentVector{0, 2, 1}));
  CHECK_FALSE(coprime(a, b));
  CHECK(total_degree(b) == 5);
  CHECK(is_squarefree(ExponentVector{1, 0, 1}));
  CHECK_FALSE(is_squarefree(a));
}

TEST_CASE("positive and negative parts recombine") {
  ExponentVector c{3, -1, 0, -2};
  CHECK(subtract(positive_part(c), negative_part(c)) == c);
  CHECK(positive_part(c) == ExponentVector{3, 0, 0, 0});
  CHECK(negative_part(c) == ExponentVector{0, 1, 0, 2});
  CHECK(to_string(c) == "(3,-1,0,-2)");
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(add(ExponentVector{1}, ExponentVector{1, 2}), std::invalid_argument);
}

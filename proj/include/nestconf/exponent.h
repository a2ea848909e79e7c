#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nestconf {

using Exponent = std::int64_t;

// One entry per ambient variable. Monomials keep every entry >= 0; lattice
// vectors (differences of monomials) reuse the same type.
using ExponentVector = std::vector<Exponent>;

// Overflow raises std::overflow_error instead of wrapping.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

ExponentVector add(const ExponentVector& a, const ExponentVector& b);
ExponentVector subtract(const ExponentVector& a, const ExponentVector& b);
ExponentVector scale(const ExponentVector& a, Exponent c);

// a | b as monomials.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);

Exponent total_degree(const ExponentVector& a);
bool is_squarefree(const ExponentVector& a);
bool is_nonnegative(const ExponentVector& a);
bool is_zero(const ExponentVector& a);

ExponentVector unit_vector(std::size_t n, std::size_t i);

// Positive and negative parts: a = positive_part(a) - negative_part(a).
ExponentVector positive_part(const ExponentVector& a);
ExponentVector negative_part(const ExponentVector& a);

// "(1,0,2)"
std::string to_string(const ExponentVector& a);

void require_same_length(const ExponentVector& a, const ExponentVector& b);

}  // namespace nestconf

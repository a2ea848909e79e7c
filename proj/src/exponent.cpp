#include "nestconf/exponent.h"

#include <algorithm>
#include <stdexcept>

namespace nestconf {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in addition");
  return r;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in subtraction");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exponent vectors have different lengths (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExponentVector subtract(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

ExponentVector scale(const ExponentVector& a, Exponent c) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Exponent total_degree(const ExponentVector& a) {
  Exponent s = 0;
  for (Exponent e : a) s = checked_add(s, e);
  return s;
}

bool is_squarefree(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](Exponent e) { return e <= 1; });
}

bool is_nonnegative(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](Exponent e) { return e >= 0; });
}

bool is_zero(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](Exponent e) { return e == 0; });
}

ExponentVector unit_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit_vector index out of range");
  ExponentVector r(n, 0);
  r[i] = 1;
  return r;
}

ExponentVector positive_part(const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? a[i] : 0;
  return r;
}

ExponentVector negative_part(const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < 0 ? checked_sub(0, a[i]) : 0;
  return r;
}

std::string to_string(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  s += ')';
  return s;
}

}  // namespace nestconf

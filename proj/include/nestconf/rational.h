#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nestconf {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
std::string to_string(const std::vector<Rational>& v);

}  // namespace nestconf

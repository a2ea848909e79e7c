#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/buchberger.h"
#include "nestconf/configuration.h"
#include "nestconf/monomial_order.h"

namespace nestconf {

struct ToricOptions {
  Exponent degree_cap = 12;
};

// Binomials x^{c+} - x^{c-} for an integer kernel basis of the column matrix.
// They generate the lattice ideal, which may be strictly smaller than I_A.
std::vector<MarkedBinomial> lattice_generators(const Configuration& a);

// Binomials joining all monomials of equal image in degrees 2..max_degree
// (each fiber is connected to its first monomial).
std::vector<MarkedBinomial> fiber_generators(const Configuration& a, Exponent max_degree);

// Reduced Groebner basis of I_A under `order`, certified by that order.
// Throws DegreeCapExceeded when an intermediate element exceeds the cap.
GroebnerBasis toric_groebner(const Configuration& a, const MonomialOrder& order, const ToricOptions& options = {});

// Unique normal form modulo a basis carrying an order certificate; throws
// std::invalid_argument otherwise.
ExponentVector ideal_normal_form(const ExponentVector& monomial, const GroebnerBasis& g);
// nullopt when the binomial reduces to zero, i.e. lies in the ideal.
std::optional<MarkedBinomial> ideal_normal_form(const MarkedBinomial& b, const GroebnerBasis& g);

// Column indices (nondecreasing) whose columns sum to v, or nullopt when v is
// not in the semigroup generated by the columns.
std::optional<std::vector<std::size_t>> semigroup_member(const ExponentVector& v, const Configuration& a);

}  // namespace nestconf

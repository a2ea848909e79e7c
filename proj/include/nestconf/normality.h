#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/configuration.h"
#include "nestconf/nested.h"

namespace nestconf {

// Integer coordinates c with sum_j c_j a_j = v, if v lies in Z{a_j}.
std::optional<ExponentVector> lattice_membership(const ExponentVector& v, const Configuration& a);

// v in Q_{>=0}{a_j}, decided by exact phase-one simplex.
bool cone_membership(const ExponentVector& v, const Configuration& a);

struct Hole {
  ExponentVector point;
  Exponent degree = 0;
};

struct HoleReport {
  std::vector<Hole> holes;  // by degree, then lexicographically
  Exponent search_bound = 0;
  // Holes exist iff one exists in degree <= rank - 1: if v = sum lambda_j a_j
  // over independent columns, the fractional part sum {lambda_j} a_j is again
  // a lattice point of the cone, of degree < rank, and a hole whenever v is.
  Exponent certifying_bound = 0;
  bool exhaustive = false;  // search_bound >= certifying_bound
  // holes in every degree of the top quarter of the searched range
  bool pattern_flag = false;
};

// All lattice points of the cone in degrees 1..degree_bound (degree = w . v
// for the grading of `a`) that are not sums of columns. Stops after the first
// hole when `first_only` is set.
HoleReport find_holes(const Configuration& a, Exponent degree_bound, bool first_only = false);

// d * (largest column degree)
Exponent default_normality_bound(const Configuration& a);

enum class NormalityStatus { Normal, NotNormal, UnknownUpTo };
std::string to_string(NormalityStatus status);

struct NormalityResult {
  NormalityStatus status = NormalityStatus::UnknownUpTo;
  std::optional<ExponentVector> witness;
  Exponent bound = 0;  // degree searched up to
  Exponent certifying_bound = 0;
  std::string method;  // "squarefree-initial" or "hole-search"
  std::optional<MonomialOrder> order;  // the order giving a squarefree initial ideal
};

// Grevlex and lex, each with the given variable priority, the columns sorted
// ascending and the columns sorted descending.
std::vector<MonomialOrder> shortcut_orders(const Configuration& a);

// Squarefree-initial shortcut over shortcut_orders first, then hole search up
// to `bound` (default_normality_bound when absent); degrees above the
// certifying bound are never needed.
NormalityResult is_normal(const Configuration& a, std::optional<Exponent> bound = std::nullopt);

// The reduced basis under `order` when every marked term is squarefree (which
// makes K[A] normal); nullopt otherwise or when the basis hits the degree cap.
std::optional<GroebnerBasis> squarefree_initial_implies_normal(const Configuration& a, const MonomialOrder& order);

// Columns supported on `coordinates`, restricted to them, in order.
Configuration pure_subring(const Configuration& a, const std::vector<std::size_t>& coordinates);

// sigma_i = lexicographically largest column of B_i (a vertex of its
// polytope). The variables using only sigma_i in every letter i, one per
// column of A, in A's order.
std::vector<std::size_t> vertex_variables_A(const NestedConfiguration& n);
Configuration vertex_subring_A(const NestedConfiguration& n);

// For letter i: the column a_k of A with the largest t_i exponent m (first
// such); the variables x^(k) whose other letters use sigma. Isomorphic to
// {t^m}(B_i), variable for variable in build_nested order.
std::vector<std::size_t> vertex_variables_B(const NestedConfiguration& n, std::size_t i);
Configuration vertex_subring_B(const NestedConfiguration& n, std::size_t i);
Exponent vertex_exponent_B(const NestedConfiguration& n, std::size_t i);

}  // namespace nestconf

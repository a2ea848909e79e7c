#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nestconf/configuration.h"
#include "nestconf/families.h"
#include "nestconf/nested.h"

namespace nestconf {

// Randomized checks shared by the acceptance suite and `random-check`.
// Everything is driven by one std::mt19937_64 so runs are reproducible.

struct InstanceShape {
  std::size_t max_outer_dim = 3;     // d
  Exponent max_outer_degree = 3;     // r
  std::size_t max_outer_columns = 4;
  std::size_t max_inner_dim = 3;
  Exponent max_inner_degree = 3;
  std::size_t max_inner_columns = 4;  // lambda_i
  std::size_t max_variables = 30;     // instances with more nested variables are skipped
};

// `count` distinct columns of total degree `degree` in `dim` variables (fewer
// when the attempts run out), in random order.
Configuration random_configuration(std::mt19937_64& rng, std::size_t dim, Exponent degree, std::size_t count);

struct RandomInstance {
  Configuration outer;
  std::vector<Configuration> inner;
};
RandomInstance random_instance(std::mt19937_64& rng, const InstanceShape& shape);

enum class CaseOutcome { Pass, Fail, Skip };
std::string to_string(CaseOutcome outcome);

struct MaincaseCase {
  CaseOutcome outcome = CaseOutcome::Skip;
  std::string note;  // reason for skip or failure
  std::size_t variables = 0;
  std::size_t family_size = 0;
  VerdictStatus status = VerdictStatus::Inconclusive;
  Exponent witness = 0;  // max degree of the family
  Exponent lower = 0;    // max(2, deg G0)
  Exponent upper = 0;    // max(2, deg G0, deg G1, ..., deg Gd)
  bool equality_applies = false;  // nonzero ideal, A squarefree, every letter used
};

// Builds family_maincase from grevlex oracles of A and the B_i, verifies it
// against the oracle of the nested configuration and checks the degree
// inequalities. Skips zero nested ideals, oversize instances and instances
// where an oracle exceeds its degree cap.
MaincaseCase check_maincase(const RandomInstance& inst, const InstanceShape& shape);

struct NormalityCase {
  CaseOutcome outcome = CaseOutcome::Skip;
  std::string note;
  std::size_t variables = 0;
  std::string method;
};

// Skips unless A and every B_i are certified Normal; then is_normal of the
// nested configuration must be Normal.
NormalityCase check_nested_normality(const RandomInstance& inst, const InstanceShape& shape);

// sort_split of two random variables with the same outer column: both outputs
// are variables and the image is unchanged. Returns an empty string on
// success, a description otherwise.
std::string check_sort_split(const NestedConfiguration& n, std::mt19937_64& rng);

struct MembershipCase {
  bool member = false;  // decided by the images of both sides
  std::string failure;  // empty when every criterion agrees
};

// A random binomial over the nested variables (a mix of members and
// non-members); membership by images, by the phi_i criterion and by oracle
// normal forms must agree, and membership must force phi_0(f) into I_A.
MembershipCase check_membership(const NestedConfiguration& n, const GroebnerBasis& nested_oracle,
                                const GroebnerBasis& outer_oracle, const std::vector<GroebnerBasis>& inner_oracles,
                                std::mt19937_64& rng);

struct SuiteTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  // maincase: counted cases where the equality applied; membership: members
  std::size_t special = 0;
  std::vector<std::string> failures;
};

// Draw instances until `counted` cases pass or fail (skips are redrawn, at
// most 50 * counted attempts).
SuiteTally run_maincase_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t counted);
SuiteTally run_normality_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t counted);
// `cases` individual checks spread over random instances.
SuiteTally run_sort_split_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t cases);
SuiteTally run_membership_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t cases);

}  // namespace nestconf

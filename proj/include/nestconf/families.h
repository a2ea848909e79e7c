#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestconf/binomial.h"
#include "nestconf/nested.h"
#include "nestconf/reduction.h"

namespace nestconf {

enum class FamilyKind {
  PCase1,
  PCase2,
  PCase3,
  MainCase4,
  Gen1,
  Gen2,
  Gen3,
  Gen4,
  BirkhoffI,
  BirkhoffII,
  CubicA,
  CubicB,
};

std::string to_string(FamilyKind kind);

// Marked binomials over a nested configuration's variables, each tagged with
// the construction that produced it. Sorted by binomial, no duplicates.
struct Family {
  std::vector<MarkedBinomial> binomials;
  std::vector<FamilyKind> kinds;

  std::size_t size() const { return binomials.size(); }
  std::size_t count(FamilyKind kind) const;
};

// Items (1)-(3) for inner configurations without relations. `g0` is a
// Groebner basis of I_A over y_1..y_n (n = columns of A). Throws
// std::invalid_argument when some I_{B_i} is nonzero.
Family family_pcase(const NestedConfiguration& n, const GroebnerBasis& g0);

// Items (1)-(4); inner[i] is a Groebner basis of I_{B_i} (empty for a zero
// ideal). Item (4) elements coming from cubic relations are tagged CubicA
// (three factors) or CubicB (two factors).
Family family_maincase(const NestedConfiguration& n, const GroebnerBasis& g0, const std::vector<GroebnerBasis>& inner);

// The same constructions driven by generating sets; the plus side of each
// input is treated as the left side.
Family family_generators(const NestedConfiguration& n, const std::vector<MarkedBinomial>& h0,
                         const std::vector<std::vector<MarkedBinomial>>& inner);

// Items (i) and (ii) for A = {t^n} over the permutation configuration, on the
// C(n+5, 5) multiset variables of the nested configuration built by
// birkhoff_nested(n). When two binomials share a marked term only the first
// in sorted order is kept. n = 1 gives the principal cubic. Throws for n = 0.
Family family_birkhoff(std::size_t n);

// The canonical pair of item (ii) for two letter strings over 0..5: the 0s are
// split as evenly as possible (extra one first) and the remaining letters are
// dealt as a sorted block, smaller half first.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> birkhoff_canonical(const std::vector<std::size_t>& u,
                                                                                 const std::vector<std::size_t>& v);

enum class VerdictStatus { CertifiedGB, CertifiedNotGB, Inconclusive };

std::string to_string(VerdictStatus status);

struct VerificationVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  // w >= 0 with w . (marked - other) >= 1 for every element
  std::optional<std::vector<Rational>> coherence;
  bool termination_evidenced = false;
  std::size_t spair_count = 0;
  std::optional<MarkedBinomial> failure_witness;
  // "soundness", "coherence", "closure", "completeness" or "budget"
  std::string failed_check;
  std::string diagnostics;
};

struct VerifyOptions {
  std::size_t budget = default_budget();
  Exponent degree_cap = 12;
  // Oracle basis to test completeness against; computed under grevlex when
  // absent.
  const GroebnerBasis* oracle = nullptr;
};

// Soundness (every element lies in I_A), coherence (weight LP, falling back to
// cycle-checked reduction), closure (every S-pair reduces to zero) and
// completeness (every oracle element reduces to zero).
VerificationVerdict verify_marked_gb(const std::vector<MarkedBinomial>& family, const Configuration& a,
                                     const VerifyOptions& options = {});

// Wraps a certified family with its certificate.
GroebnerBasis certified_basis(const std::vector<MarkedBinomial>& family, const VerificationVerdict& verdict);

struct DegreeStats {
  Exponent max_degree = 0;
  bool is_quadratic = true;        // every element has degree <= 2
  bool initial_squarefree = true;  // every marked term is squarefree
};

DegreeStats degree_stats(const std::vector<MarkedBinomial>& family);

}  // namespace nestconf

#include "nestconf/properties.h"

#include <algorithm>
#include <set>

#include "nestconf/buchberger.h"
#include "nestconf/linalg.h"
#include "nestconf/normality.h"
#include "nestconf/toric.h"

namespace nestconf {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

GroebnerBasis grevlex_basis(const Configuration& a) {
  return toric_groebner(a, MonomialOrder::graded_revlex(a.size()));
}

bool nonzero_ideal(const NestedConfiguration& n) {
  // I_N = 0 iff the columns are linearly independent
  return rank_of(n.config.columns) < n.size();
}

}  // namespace

std::string to_string(CaseOutcome outcome) {
  switch (outcome) {
    case CaseOutcome::Pass: return "pass";
    case CaseOutcome::Fail: return "fail";
    case CaseOutcome::Skip: return "skip";
  }
  return "?";
}

Configuration random_configuration(std::mt19937_64& rng, std::size_t dim, Exponent degree, std::size_t count) {
  std::set<ExponentVector> cols;
  for (int tries = 0; cols.size() < count && tries < 200; ++tries) {
    ExponentVector v(dim, 0);
    for (Exponent k = 0; k < degree; ++k) ++v[uniform(rng, 0, dim - 1)];
    cols.insert(v);
  }
  std::vector<ExponentVector> c(cols.begin(), cols.end());
  std::shuffle(c.begin(), c.end(), rng);
  return make_configuration(std::move(c));
}

RandomInstance random_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  RandomInstance inst;
  const std::size_t d = uniform(rng, 1, shape.max_outer_dim);
  const auto r = static_cast<Exponent>(uniform(rng, 1, static_cast<std::size_t>(shape.max_outer_degree)));
  inst.outer = random_configuration(rng, d, r, uniform(rng, 1, shape.max_outer_columns));
  for (std::size_t i = 0; i < d; ++i)
    inst.inner.push_back(random_configuration(
        rng, uniform(rng, 1, shape.max_inner_dim),
        static_cast<Exponent>(uniform(rng, 1, static_cast<std::size_t>(shape.max_inner_degree))),
        uniform(rng, 1, shape.max_inner_columns)));
  return inst;
}

MaincaseCase check_maincase(const RandomInstance& inst, const InstanceShape& shape) {
  MaincaseCase out;
  NestedConfiguration n = build_nested(inst.outer, inst.inner);
  out.variables = n.size();
  if (n.size() > shape.max_variables) {
    out.note = "too many variables";
    return out;
  }
  if (!nonzero_ideal(n)) {
    out.note = "zero ideal";
    return out;
  }
  try {
    GroebnerBasis g0 = grevlex_basis(inst.outer);
    std::vector<GroebnerBasis> gi;
    for (const auto& b : inst.inner) gi.push_back(grevlex_basis(b));
    GroebnerBasis oracle = grevlex_basis(n.config);

    Family f = family_maincase(n, g0, gi);
    out.family_size = f.size();
    VerifyOptions options;
    options.oracle = &oracle;
    VerificationVerdict v = verify_marked_gb(f.binomials, n.config, options);
    out.status = v.status;
    out.witness = degree_stats(f.binomials).max_degree;
    out.lower = std::max<Exponent>(2, g0.max_degree());
    out.upper = out.lower;
    for (const auto& g : gi) out.upper = std::max(out.upper, g.max_degree());

    bool squarefree = true, every_letter = true;
    for (const auto& c : inst.outer.columns) squarefree = squarefree && is_squarefree(c);
    for (std::size_t i = 0; i < inst.outer.dim; ++i) {
      bool used = false;
      for (const auto& c : inst.outer.columns) used = used || c[i] > 0;
      every_letter = every_letter && used;
    }
    out.equality_applies = squarefree && every_letter;

    out.outcome = CaseOutcome::Pass;
    if (v.status != VerdictStatus::CertifiedGB) {
      out.outcome = CaseOutcome::Fail;
      out.note = "verdict " + to_string(v.status) + " (" + v.failed_check + ")";
    } else if (out.witness < out.lower || out.witness > out.upper) {
      out.outcome = CaseOutcome::Fail;
      out.note = "degree " + std::to_string(out.witness) + " outside [" + std::to_string(out.lower) + ", " +
                 std::to_string(out.upper) + "]";
    } else if (out.equality_applies && out.witness != out.upper) {
      out.outcome = CaseOutcome::Fail;
      out.note = "squarefree outer: degree " + std::to_string(out.witness) + " != " + std::to_string(out.upper);
    }
  } catch (const DegreeCapExceeded&) {
    out.outcome = CaseOutcome::Skip;
    out.note = "oracle degree cap";
  }
  return out;
}

NormalityCase check_nested_normality(const RandomInstance& inst, const InstanceShape& shape) {
  NormalityCase out;
  NestedConfiguration n = build_nested(inst.outer, inst.inner);
  out.variables = n.size();
  if (n.size() > shape.max_variables) {
    out.note = "too many variables";
    return out;
  }
  Configuration points = n.point_configuration();
  if (rank_of(points.columns) == points.size()) {
    out.note = "independent columns";
    return out;
  }
  if (is_normal(inst.outer).status != NormalityStatus::Normal) {
    out.note = "outer not normal";
    return out;
  }
  for (const auto& b : inst.inner)
    if (is_normal(b).status != NormalityStatus::Normal) {
      out.note = "inner not normal";
      return out;
    }
  NormalityResult r = is_normal(points);
  out.method = r.method;
  if (r.status == NormalityStatus::Normal) {
    out.outcome = CaseOutcome::Pass;
  } else {
    out.outcome = CaseOutcome::Fail;
    out.note = to_string(r.status) + (r.witness ? " witness=" + to_string(*r.witness) : "") +
               " bound=" + std::to_string(r.bound);
  }
  return out;
}

std::string check_sort_split(const NestedConfiguration& n, std::mt19937_64& rng) {
  const auto& u = n.variables[uniform(rng, 0, n.size() - 1)];
  std::vector<std::size_t> same;
  for (std::size_t v = 0; v < n.size(); ++v)
    if (n.variables[v].k == u.k) same.push_back(v);
  const auto& v = n.variables[same[uniform(rng, 0, same.size() - 1)]];
  auto [p, q] = sort_split(u, v);
  if (!n.contains(p) || !n.contains(q)) return "sort_split(" + display(u) + ", " + display(v) + ") left the variables";
  const auto& c = n.config.columns;
  if (add(c[n.index_of(u)], c[n.index_of(v)]) != add(c[n.index_of(p)], c[n.index_of(q)]))
    return "sort_split(" + display(u) + ", " + display(v) + ") changed the image";
  if (p.k != u.k || q.k != u.k) return "sort_split changed the outer column";
  if (sort_split(p, q) != std::make_pair(p, q)) return "sort_split output is not a fixed point";
  return {};
}

MembershipCase check_membership(const NestedConfiguration& n, const GroebnerBasis& nested_oracle,
                                const GroebnerBasis& outer_oracle, const std::vector<GroebnerBasis>& inner_oracles,
                                std::mt19937_64& rng) {
  const std::size_t s = uniform(rng, 1, 4);
  auto random_monomial = [&] {
    ExponentVector m(n.size(), 0);
    for (std::size_t t = 0; t < s; ++t) ++m[uniform(rng, 0, n.size() - 1)];
    return m;
  };
  ExponentVector m1 = random_monomial(), m2;
  switch (uniform(rng, 0, 2)) {
    case 0:
      m2 = random_monomial();
      break;
    case 1: {
      // a few sort_split rewrites on pairs of factors with the same outer column
      std::vector<std::size_t> factors;
      for (std::size_t v = 0; v < m1.size(); ++v)
        for (Exponent e = 0; e < m1[v]; ++e) factors.push_back(v);
      for (int step = 0; step < 4 && factors.size() >= 2; ++step) {
        std::size_t a = uniform(rng, 0, factors.size() - 1), b = uniform(rng, 0, factors.size() - 1);
        if (a == b || n.variables[factors[a]].k != n.variables[factors[b]].k) continue;
        auto [p, q] = sort_split(n.variables[factors[a]], n.variables[factors[b]]);
        factors[a] = n.index_of(p);
        factors[b] = n.index_of(q);
      }
      m2.assign(n.size(), 0);
      for (auto v : factors) ++m2[v];
      break;
    }
    default:
      m2 = ideal_normal_form(m1, nested_oracle);
  }

  MembershipCase out;
  out.member = n.config.image(m1) == n.config.image(m2);
  bool phi = true;
  for (std::size_t i = 0; i < n.inner.size(); ++i) {
    const auto& b = n.inner[i];
    phi = phi && b.image(hom_phij(n, m1, i)) == b.image(hom_phij(n, m2, i));
  }
  bool phi_oracle = true;
  for (std::size_t i = 0; i < n.inner.size(); ++i)
    phi_oracle = phi_oracle && ideal_normal_form(hom_phij(n, m1, i), inner_oracles[i]) ==
                                   ideal_normal_form(hom_phij(n, m2, i), inner_oracles[i]);
  const bool oracle = ideal_normal_form(m1, nested_oracle) == ideal_normal_form(m2, nested_oracle);
  const std::string f = display_monomial(n, m1) + " - " + display_monomial(n, m2);
  if (phi != out.member || phi_oracle != out.member || oracle != out.member)
    out.failure = "criteria disagree on " + f;
  else if (out.member &&
           ideal_normal_form(hom_phi0(n, m1), outer_oracle) != ideal_normal_form(hom_phi0(n, m2), outer_oracle))
    out.failure = "phi_0 image of member " + f + " is not in I_A";
  return out;
}

namespace {

void tally(SuiteTally& t, CaseOutcome outcome, const std::string& note) {
  switch (outcome) {
    case CaseOutcome::Pass: ++t.pass; break;
    case CaseOutcome::Fail:
      ++t.fail;
      t.failures.push_back(note);
      break;
    case CaseOutcome::Skip: ++t.skip; break;
  }
}

constexpr std::size_t kCasesPerInstance = 50;
// smaller instances make the sort_split and membership checks nearly vacuous
constexpr std::size_t kMinSuiteVariables = 3;

}  // namespace

SuiteTally run_maincase_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t counted) {
  SuiteTally t;
  for (std::size_t attempt = 0; t.pass + t.fail < counted && attempt < 50 * counted; ++attempt) {
    MaincaseCase c = check_maincase(random_instance(rng, shape), shape);
    tally(t, c.outcome, c.note);
    if (c.outcome != CaseOutcome::Skip && c.equality_applies) ++t.special;
  }
  return t;
}

SuiteTally run_normality_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t counted) {
  SuiteTally t;
  for (std::size_t attempt = 0; t.pass + t.fail < counted && attempt < 50 * counted; ++attempt) {
    NormalityCase c = check_nested_normality(random_instance(rng, shape), shape);
    tally(t, c.outcome, c.note);
  }
  return t;
}

SuiteTally run_sort_split_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t cases) {
  SuiteTally t;
  while (t.pass + t.fail < cases) {
    RandomInstance inst = random_instance(rng, shape);
    NestedConfiguration n = build_nested(inst.outer, inst.inner);
    if (n.size() > shape.max_variables || n.size() < kMinSuiteVariables) {
      ++t.skip;
      continue;
    }
    for (std::size_t c = 0; c < kCasesPerInstance && t.pass + t.fail < cases; ++c) {
      std::string failure = check_sort_split(n, rng);
      tally(t, failure.empty() ? CaseOutcome::Pass : CaseOutcome::Fail, failure);
    }
  }
  return t;
}

SuiteTally run_membership_suite(std::mt19937_64& rng, const InstanceShape& shape, std::size_t cases) {
  SuiteTally t;
  while (t.pass + t.fail < cases) {
    RandomInstance inst = random_instance(rng, shape);
    NestedConfiguration n = build_nested(inst.outer, inst.inner);
    if (n.size() > shape.max_variables || n.size() < kMinSuiteVariables) {
      ++t.skip;
      continue;
    }
    GroebnerBasis nested_oracle, outer_oracle;
    std::vector<GroebnerBasis> inner_oracles;
    try {
      nested_oracle = grevlex_basis(n.config);
      outer_oracle = grevlex_basis(inst.outer);
      for (const auto& b : inst.inner) inner_oracles.push_back(grevlex_basis(b));
    } catch (const DegreeCapExceeded&) {
      ++t.skip;
      continue;
    }
    for (std::size_t c = 0; c < kCasesPerInstance && t.pass + t.fail < cases; ++c) {
      MembershipCase m = check_membership(n, nested_oracle, outer_oracle, inner_oracles, rng);
      tally(t, m.failure.empty() ? CaseOutcome::Pass : CaseOutcome::Fail, m.failure);
      if (m.member) ++t.special;
    }
  }
  return t;
}

}  // namespace nestconf

#include "nestconf/families.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nestconf/birkhoff.h"
#include "nestconf/linalg.h"
#include "nestconf/lp.h"
#include "nestconf/toric.h"

namespace nestconf {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::PCase1: return "pcase-1";
    case FamilyKind::PCase2: return "pcase-2";
    case FamilyKind::PCase3: return "pcase-3";
    case FamilyKind::MainCase4: return "maincase-4";
    case FamilyKind::Gen1: return "gen-1";
    case FamilyKind::Gen2: return "gen-2";
    case FamilyKind::Gen3: return "gen-3";
    case FamilyKind::Gen4: return "gen-4";
    case FamilyKind::BirkhoffI: return "birkhoff-i";
    case FamilyKind::BirkhoffII: return "birkhoff-ii";
    case FamilyKind::CubicA: return "cubic-a";
    case FamilyKind::CubicB: return "cubic-b";
  }
  return "?";
}

std::size_t Family::count(FamilyKind kind) const { return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), kind)); }

namespace {

// Collects binomials; the first kind recorded for a binomial wins.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(std::size_t variables) : variables_(variables) {}

  ExponentVector monomial(const std::vector<std::size_t>& vars) const {
    ExponentVector m(variables_, 0);
    for (auto v : vars) ++m[v];
    return m;
  }

  void add(const std::vector<std::size_t>& lead, const std::vector<std::size_t>& tail, FamilyKind kind) {
    ExponentVector l = monomial(lead), t = monomial(tail);
    if (l == t) return;
    items_.emplace(MarkedBinomial{std::move(l), std::move(t), Side::Plus}, kind);
  }

  void add(MarkedBinomial b, FamilyKind kind) {
    if (b.plus == b.minus) return;
    items_.emplace(b.canonical(), kind);
  }

  Family finish() {
    Family f;
    for (auto& [b, k] : items_) {
      f.binomials.push_back(b);
      f.kinds.push_back(k);
    }
    return f;
  }

 private:
  std::size_t variables_;
  std::map<MarkedBinomial, FamilyKind> items_;
};

std::vector<std::vector<std::size_t>> variables_by_outer(const NestedConfiguration& n) {
  std::vector<std::vector<std::size_t>> by(n.outer.columns.size());
  for (std::size_t v = 0; v < n.size(); ++v) by[n.variables[v].k].push_back(v);
  return by;
}

std::vector<std::size_t> expand(const ExponentVector& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (Exponent c = 0; c < e[i]; ++c) out.push_back(i);
  return out;
}

// Item (1): every left lift of y^lead, right side by greedy redistribution.
void lift_outer(const NestedConfiguration& n, const ExponentVector& lead, const ExponentVector& tail, FamilyKind kind,
                const std::vector<std::vector<std::size_t>>& by_outer, FamilyBuilder& out) {
  if (lead.size() != n.outer.columns.size() || tail.size() != lead.size())
    throw std::invalid_argument("outer binomial has the wrong number of variables");
  const std::vector<std::size_t> left_ks = expand(lead);
  const std::vector<std::size_t> right_ks = expand(tail);
  const std::size_t d = n.outer.dim;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == left_ks.size()) {
      std::vector<std::vector<std::size_t>> letters(d);
      for (auto v : chosen)
        for (const auto& p : n.variables[v].pairs) letters[p.i].push_back(p.j);
      for (auto& l : letters) std::sort(l.begin(), l.end());
      std::vector<std::size_t> cursor(d, 0), right;
      for (auto k : right_ks) {
        NestedVariable x{k, {}};
        for (std::size_t i = 0; i < d; ++i)
          for (Exponent c = 0; c < n.outer.columns[k][i]; ++c) x.pairs.push_back({i, letters[i][cursor[i]++]});
        right.push_back(n.index_of(x));
      }
      out.add(chosen, right, kind);
      return;
    }
    const auto& candidates = by_outer[left_ks[pos]];
    // nondecreasing choice within a run of equal outer indices
    std::size_t start = 0;
    if (pos > 0 && left_ks[pos - 1] == left_ks[pos])
      start = static_cast<std::size_t>(std::find(candidates.begin(), candidates.end(), chosen.back()) - candidates.begin());
    for (std::size_t c = start; c < candidates.size(); ++c) {
      chosen.push_back(candidates[c]);
      rec(pos + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

// Item (2).
void sort_moves(const NestedConfiguration& n, FamilyKind kind, const std::vector<std::vector<std::size_t>>& by_outer,
                FamilyBuilder& out) {
  for (const auto& vars : by_outer)
    for (std::size_t a = 0; a < vars.size(); ++a)
      for (std::size_t b = a; b < vars.size(); ++b) {
        auto [u, v] = sort_split(n.variables[vars[a]], n.variables[vars[b]]);
        out.add({vars[a], vars[b]}, {n.index_of(u), n.index_of(v)}, kind);
      }
}

// Item (3).
void swap_moves(const NestedConfiguration& n, FamilyKind kind, const std::vector<std::vector<std::size_t>>& by_outer,
                FamilyBuilder& out) {
  for (std::size_t k = 0; k < by_outer.size(); ++k)
    for (std::size_t k2 = k + 1; k2 < by_outer.size(); ++k2)
      for (auto a : by_outer[k])
        for (auto b : by_outer[k2]) {
          const auto& u = n.variables[a];
          const auto& v = n.variables[b];
          for (std::size_t l = 0; l < u.pairs.size(); ++l) {
            if (l > 0 && u.pairs[l] == u.pairs[l - 1]) continue;
            for (std::size_t l2 = 0; l2 < v.pairs.size(); ++l2) {
              if (l2 > 0 && v.pairs[l2] == v.pairs[l2 - 1]) continue;
              if (u.pairs[l].i != v.pairs[l2].i || u.pairs[l].j <= v.pairs[l2].j) continue;
              NestedVariable u2 = u, v2 = v;
              u2.pairs[l] = v.pairs[l2];
              v2.pairs[l2] = u.pairs[l];
              u2.pairs = sort_pairs(std::move(u2.pairs));
              v2.pairs = sort_pairs(std::move(v2.pairs));
              out.add({a, b}, {n.index_of(u2), n.index_of(v2)}, kind);
            }
          }
        }
}

// Set partitions of {0..q-1} as block lists.
void set_partitions(std::size_t q, std::size_t pos, std::vector<std::vector<std::size_t>>& cur,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (pos == q) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(pos);
    set_partitions(q, pos + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({pos});
  set_partitions(q, pos + 1, cur, out);
  cur.pop_back();
}

using Block = std::vector<std::size_t>;  // sorted inner indices

// Item (4) for one inner binomial z^lead - z^tail of letter i.
void embed_inner(const NestedConfiguration& n, std::size_t i, const ExponentVector& lead, const ExponentVector& tail,
                 bool tag_cubic, FamilyKind kind, FamilyBuilder& out) {
  const std::vector<std::size_t> L = expand(lead), T = expand(tail);
  if (L.size() != T.size()) throw std::invalid_argument("inner binomial is not homogeneous");
  const std::size_t q = L.size();
  std::vector<std::vector<std::vector<std::size_t>>> parts;
  std::vector<std::vector<std::size_t>> cur;
  set_partitions(q, 0, cur, parts);

  auto to_blocks = [](const std::vector<std::vector<std::size_t>>& part, const std::vector<std::size_t>& values) {
    std::vector<Block> blocks;
    for (const auto& b : part) {
      Block blk;
      for (auto pos : b) blk.push_back(values[pos]);
      std::sort(blk.begin(), blk.end());
      blocks.push_back(blk);
    }
    return blocks;
  };

  // Matched block collections, deduplicated.
  std::set<std::vector<std::pair<Block, Block>>> matchings;
  for (const auto& lp : parts)
    for (const auto& tp : parts) {
      if (lp.size() != tp.size()) continue;
      std::vector<Block> lb = to_blocks(lp, L), tb = to_blocks(tp, T);
      std::vector<std::size_t> perm(tb.size());
      for (std::size_t s = 0; s < perm.size(); ++s) perm[s] = s;
      do {
        bool sizes_ok = true;
        for (std::size_t s = 0; s < lb.size(); ++s)
          if (lb[s].size() != tb[perm[s]].size()) sizes_ok = false;
        if (!sizes_ok) continue;
        std::vector<std::pair<Block, Block>> m;
        for (std::size_t s = 0; s < lb.size(); ++s) m.emplace_back(lb[s], tb[perm[s]]);
        std::sort(m.begin(), m.end());
        matchings.insert(std::move(m));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

  // Letter-i multiplicities of each variable.
  const std::size_t lambda = n.inner[i].columns.size();
  std::vector<std::vector<Exponent>> counts(n.size(), std::vector<Exponent>(lambda, 0));
  for (std::size_t v = 0; v < n.size(); ++v)
    for (const auto& p : n.variables[v].pairs)
      if (p.i == i) ++counts[v][p.j];

  for (const auto& m : matchings) {
    const std::size_t p = m.size();
    FamilyKind k = kind;
    if (tag_cubic && q == 3 && p == 3) k = FamilyKind::CubicA;
    if (tag_cubic && q == 3 && p == 2) k = FamilyKind::CubicB;
    // candidates per block: variables containing the lead block at letter i
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cands(p);  // (left, right)
    for (std::size_t s = 0; s < p; ++s) {
      const auto& [lb, tb] = m[s];
      for (std::size_t v = 0; v < n.size(); ++v) {
        std::vector<Exponent> need(lambda, 0);
        for (auto j : lb) ++need[j];
        bool fits = true;
        for (std::size_t j = 0; j < lambda; ++j)
          if (need[j] > counts[v][j]) fits = false;
        if (!fits) continue;
        NestedVariable x = n.variables[v];
        for (auto j : lb) x.pairs.erase(std::find(x.pairs.begin(), x.pairs.end(), Pair{i, j}));
        for (auto j : tb) x.pairs.push_back({i, j});
        x.pairs = sort_pairs(std::move(x.pairs));
        cands[s].emplace_back(v, n.index_of(x));
      }
    }
    std::vector<std::size_t> left, right;
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
      if (s == p) {
        out.add(left, right, k);
        return;
      }
      for (const auto& [a, b] : cands[s]) {
        left.push_back(a);
        right.push_back(b);
        rec(s + 1);
        left.pop_back();
        right.pop_back();
      }
    };
    rec(0);
  }
}

bool has_relations(const Configuration& b) { return !integer_kernel(b.columns).empty(); }

}  // namespace

Family family_pcase(const NestedConfiguration& n, const GroebnerBasis& g0) {
  for (std::size_t i = 0; i < n.inner.size(); ++i)
    if (has_relations(n.inner[i]))
      throw std::invalid_argument("inner configuration " + std::to_string(i + 1) +
                                  " has a nonzero toric ideal; use family_maincase");
  auto by_outer = variables_by_outer(n);
  FamilyBuilder out(n.size());
  for (const auto& g : g0.elements) lift_outer(n, g.lead(), g.tail(), FamilyKind::PCase1, by_outer, out);
  sort_moves(n, FamilyKind::PCase2, by_outer, out);
  swap_moves(n, FamilyKind::PCase3, by_outer, out);
  return out.finish();
}

Family family_maincase(const NestedConfiguration& n, const GroebnerBasis& g0, const std::vector<GroebnerBasis>& inner) {
  if (inner.size() != n.inner.size())
    throw std::invalid_argument("family_maincase needs one inner basis per inner configuration");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i].elements.empty()) {
      if (has_relations(n.inner[i]))
        throw std::invalid_argument("missing Groebner basis for inner configuration " + std::to_string(i + 1));
      continue;
    }
    if (!inner[i].reduced) throw std::invalid_argument("inner basis " + std::to_string(i + 1) + " is not reduced");
    if (inner[i].variables() != n.inner[i].columns.size())
      throw std::invalid_argument("inner basis " + std::to_string(i + 1) + " has the wrong number of variables");
  }
  auto by_outer = variables_by_outer(n);
  FamilyBuilder out(n.size());
  for (const auto& g : g0.elements) lift_outer(n, g.lead(), g.tail(), FamilyKind::PCase1, by_outer, out);
  sort_moves(n, FamilyKind::PCase2, by_outer, out);
  swap_moves(n, FamilyKind::PCase3, by_outer, out);
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (const auto& g : inner[i].elements) embed_inner(n, i, g.lead(), g.tail(), true, FamilyKind::MainCase4, out);
  return out.finish();
}

Family family_generators(const NestedConfiguration& n, const std::vector<MarkedBinomial>& h0,
                         const std::vector<std::vector<MarkedBinomial>>& inner) {
  if (inner.size() != n.inner.size())
    throw std::invalid_argument("family_generators needs one generator list per inner configuration");
  auto by_outer = variables_by_outer(n);
  FamilyBuilder out(n.size());
  for (const auto& h : h0) lift_outer(n, h.plus, h.minus, FamilyKind::Gen1, by_outer, out);
  sort_moves(n, FamilyKind::Gen2, by_outer, out);
  swap_moves(n, FamilyKind::Gen3, by_outer, out);
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (const auto& h : inner[i]) {
      if (h.variables() != n.inner[i].columns.size())
        throw std::invalid_argument("inner generator " + std::to_string(i + 1) + " has the wrong number of variables");
      embed_inner(n, i, h.plus, h.minus, false, FamilyKind::Gen4, out);
    }
  return out.finish();
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> birkhoff_canonical(const std::vector<std::size_t>& u,
                                                                                 const std::vector<std::size_t>& v) {
  std::vector<std::size_t> s = u;
  s.insert(s.end(), v.begin(), v.end());
  std::sort(s.begin(), s.end());
  const std::size_t ones = static_cast<std::size_t>(std::count(s.begin(), s.end(), 0));
  const std::size_t beta = ones / 2;
  std::vector<std::size_t> rest(s.begin() + static_cast<std::ptrdiff_t>(2 * beta), s.end());
  const std::size_t alpha = rest.size() / 2;
  std::vector<std::size_t> a(beta, 0), b(beta, 0);
  a.insert(a.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(alpha));
  b.insert(b.end(), rest.begin() + static_cast<std::ptrdiff_t>(alpha), rest.end());
  return {a, b};
}

Family family_birkhoff(std::size_t n) {
  if (n == 0) throw std::invalid_argument("family_birkhoff needs n >= 1");
  NestedConfiguration nc = birkhoff_nested(n);
  auto word = [&](std::size_t v) {
    std::vector<std::size_t> w;
    for (const auto& p : nc.variables[v].pairs) w.push_back(p.j);
    return w;
  };
  auto var = [&](std::vector<std::size_t> w) {
    std::sort(w.begin(), w.end());
    NestedVariable x{0, {}};
    for (auto j : w) x.pairs.push_back({0, j});
    return nc.index_of(x);
  };
  FamilyBuilder out(nc.size());
  if (n == 1) {
    out.add({var({0}), var({1}), var({2})}, {var({3}), var({4}), var({5})}, FamilyKind::BirkhoffI);
    return out.finish();
  }
  // (i): x_{j1 j2 M1} x_{j3 M2} - x_{j4 j5 M1} x_{j6 M2}
  std::vector<std::vector<std::size_t>> m1s, m2s;
  {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t, std::vector<std::vector<std::size_t>>&)> rec =
        [&](std::size_t len, std::size_t from, std::vector<std::vector<std::size_t>>& dst) {
          if (cur.size() == len) {
            dst.push_back(cur);
            return;
          }
          for (std::size_t j = from; j < 6; ++j) {
            cur.push_back(j);
            rec(len, j, dst);
            cur.pop_back();
          }
        };
    rec(n - 2, 0, m1s);
    rec(n - 1, 0, m2s);
  }
  for (std::size_t single = 0; single < 3; ++single)
    for (std::size_t single2 = 3; single2 < 6; ++single2) {
      std::vector<std::size_t> pair, pair2;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != single) pair.push_back(j);
      for (std::size_t j = 3; j < 6; ++j)
        if (j != single2) pair2.push_back(j);
      for (const auto& m1 : m1s)
        for (const auto& m2 : m2s) {
          auto u = m1, v = m2, u2 = m1, v2 = m2;
          u.insert(u.end(), pair.begin(), pair.end());
          v.push_back(single);
          u2.insert(u2.end(), pair2.begin(), pair2.end());
          v2.push_back(single2);
          out.add({var(u), var(v)}, {var(u2), var(v2)}, FamilyKind::BirkhoffI);
        }
    }
  // (ii): u v - canonical(u v) for every non-canonical pair
  for (std::size_t a = 0; a < nc.size(); ++a)
    for (std::size_t b = a; b < nc.size(); ++b) {
      auto [c1, c2] = birkhoff_canonical(word(a), word(b));
      out.add({a, b}, {var(c1), var(c2)}, FamilyKind::BirkhoffII);
    }
  Family all = out.finish();
  // one binomial per marked term
  Family f;
  std::set<ExponentVector> leads;
  for (std::size_t e = 0; e < all.size(); ++e)
    if (leads.insert(all.binomials[e].lead()).second) {
      f.binomials.push_back(all.binomials[e]);
      f.kinds.push_back(all.kinds[e]);
    }
  return f;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::CertifiedGB: return "certified-GB";
    case VerdictStatus::CertifiedNotGB: return "certified-not-GB";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerificationVerdict verify_marked_gb(const std::vector<MarkedBinomial>& family, const Configuration& a,
                                     const VerifyOptions& options) {
  VerificationVerdict verdict;
  const std::size_t n = a.columns.size();
  for (const auto& f : family)
    if (f.variables() != n)
      throw std::invalid_argument("binomial has " + std::to_string(f.variables()) + " variables, configuration has " +
                                  std::to_string(n));
  auto fail = [&](VerdictStatus status, const char* check, std::optional<MarkedBinomial> witness, std::string why) {
    verdict.status = status;
    verdict.failed_check = check;
    verdict.failure_witness = std::move(witness);
    verdict.diagnostics = std::move(why);
    return verdict;
  };

  // (1) soundness
  for (const auto& f : family)
    if (a.image(f.plus) != a.image(f.minus))
      return fail(VerdictStatus::CertifiedNotGB, "soundness", f, "binomial does not lie in the toric ideal");

  // (2) coherence
  std::vector<ExponentVector> rows;
  for (const auto& f : family) rows.push_back(subtract(f.lead(), f.tail()));
  verdict.coherence = strictly_positive_weight(rows);
  const bool watch_cycles = !verdict.coherence;

  MarkedReducer reducer(family);
  auto normal_form = [&](const ExponentVector& m, ExponentVector& nf) -> std::optional<VerificationVerdict> {
    auto r = reducer.reduce(m, options.budget, watch_cycles);
    if (r.cycle)
      return fail(VerdictStatus::CertifiedNotGB, "coherence", std::nullopt,
                  "marked reduction of " + to_string(m) + " revisits a monomial");
    if (!r.complete)
      return fail(VerdictStatus::Inconclusive, "budget", std::nullopt,
                  "reduction of " + to_string(m) + " exceeded " + std::to_string(options.budget) + " steps");
    nf = std::move(r.normal_form);
    return std::nullopt;
  };

  // (3) closure
  ExponentVector nf1, nf2;
  for (std::size_t p = 0; p < family.size(); ++p)
    for (std::size_t q = p + 1; q < family.size(); ++q) {
      const auto& lp = family[p].lead();
      const auto& lq = family[q].lead();
      if (coprime(lp, lq)) continue;
      ++verdict.spair_count;
      ExponentVector l = lcm(lp, lq);
      if (auto v = normal_form(add(subtract(l, lp), family[p].tail()), nf1)) return *v;
      if (auto v = normal_form(add(subtract(l, lq), family[q].tail()), nf2)) return *v;
      if (nf1 != nf2)
        return fail(VerdictStatus::CertifiedNotGB, "closure", MarkedBinomial{nf1, nf2, Side::Plus},
                    "S-pair of elements " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                        " does not reduce to zero");
    }

  // (4) completeness
  GroebnerBasis computed;
  const GroebnerBasis* oracle = options.oracle;
  if (!oracle) {
    try {
      ToricOptions topts;
      topts.degree_cap = options.degree_cap;
      computed = toric_groebner(a, MonomialOrder::graded_revlex(n), topts);
    } catch (const DegreeCapExceeded& e) {
      return fail(VerdictStatus::Inconclusive, "budget", std::nullopt, e.what());
    }
    oracle = &computed;
  }
  for (const auto& g : oracle->elements) {
    if (auto v = normal_form(g.plus, nf1)) return *v;
    if (auto v = normal_form(g.minus, nf2)) return *v;
    if (nf1 != nf2)
      return fail(VerdictStatus::CertifiedNotGB, "completeness", g, "oracle element does not reduce to zero");
  }

  verdict.status = VerdictStatus::CertifiedGB;
  verdict.termination_evidenced = watch_cycles;
  return verdict;
}

GroebnerBasis certified_basis(const std::vector<MarkedBinomial>& family, const VerificationVerdict& verdict) {
  if (verdict.status != VerdictStatus::CertifiedGB) throw std::invalid_argument("family is not certified");
  GroebnerBasis g;
  for (const auto& f : family) g.elements.push_back(f.canonical());
  canonicalize(g.elements);
  if (verdict.coherence)
    g.certificate = CoherenceWitness{MonomialOrder::weighted(*verdict.coherence)};
  else
    g.certificate = TerminationEvidenced{};
  return g;
}

DegreeStats degree_stats(const std::vector<MarkedBinomial>& family) {
  DegreeStats s;
  for (const auto& f : family) {
    s.max_degree = std::max(s.max_degree, f.degree());
    if (f.degree() > 2) s.is_quadratic = false;
    if (!is_squarefree(f.lead())) s.initial_squarefree = false;
  }
  return s;
}

}  // namespace nestconf

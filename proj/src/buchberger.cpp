#include "nestconf/buchberger.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <tuple>

namespace nestconf {

namespace {

using Mask = std::uint64_t;

Mask support_mask(const ExponentVector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m |= Mask{1} << (i & 63);
  return m;
}

bool divides_masked(const ExponentVector& a, Mask ma, const ExponentVector& b, Mask mb) {
  if ((ma & ~mb) != 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Element {
  ExponentVector lead;
  ExponentVector tail;
  Mask mask = 0;
  bool active = true;
};

struct Pair {
  Exponent degree;
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
  Mask mask;
  bool alive = true;
};

struct QueueEntry {
  Exponent degree;
  std::size_t i;
  std::size_t j;
  std::size_t slot;
  // min-heap on (degree, i, j)
  bool operator<(const QueueEntry& o) const { return std::tie(degree, i, j) > std::tie(o.degree, o.i, o.j); }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const BuchbergerOptions& options, std::size_t n)
      : order_(order), options_(options), n_(n), exact_masks_(n <= 64), buckets_(n) {
    saturated_ = options.saturated;
    saturated_.resize(n, false);
  }

  void add_generator(const MarkedBinomial& g) {
    auto b = MarkedBinomial::oriented(g.plus, g.minus, order_);
    if (!b) return;
    auto reduced = top_reduce(std::move(b->plus), std::move(b->minus));
    if (reduced) insert(std::move(reduced->first), std::move(reduced->second));
  }

  void run(BuchbergerStats* stats) {
    while (!queue_.empty()) {
      QueueEntry q = queue_.top();
      queue_.pop();
      Pair& p = pool_[q.slot];
      if (!p.alive) continue;
      p.alive = false;
      --live_pairs_;
      const Element& a = elements_[p.i];
      const Element& b = elements_[p.j];
      // S(a, b) = (L/a.lead) a.tail - (L/b.lead) b.tail
      ExponentVector s1(n_), s2(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        s1[v] = p.lcm[v] - a.lead[v] + a.tail[v];
        s2[v] = p.lcm[v] - b.lead[v] + b.tail[v];
      }
      p.lcm = {};
      if (stats) ++stats->pairs_reduced;
      cancel(s1, s2);
      auto oriented = MarkedBinomial::oriented(std::move(s1), std::move(s2), order_);
      if (!oriented) continue;
      auto reduced = top_reduce(std::move(oriented->plus), std::move(oriented->minus));
      if (reduced) insert(std::move(reduced->first), std::move(reduced->second));
      if (stats) stats->max_basis = std::max(stats->max_basis, active_.size());
      if (pool_.size() > 1024 && live_pairs_ * 4 < pool_.size()) compact();
    }
  }

  std::vector<MarkedBinomial> reduced_basis() {
    std::vector<MarkedBinomial> out;
    for (std::size_t idx : active_) {
      const Element& e = elements_[idx];
      ExponentVector t = e.tail;
      while (auto d = find_divisor(t, support_mask(t))) {
        const Element& g = elements_[*d];
        for (std::size_t v = 0; v < n_; ++v) t[v] = t[v] - g.lead[v] + g.tail[v];
      }
      out.push_back(MarkedBinomial{e.lead, std::move(t), Side::Plus});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void cancel(ExponentVector& a, ExponentVector& b) const {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!saturated_[v]) continue;
      Exponent c = std::min(a[v], b[v]);
      if (c > 0) {
        a[v] -= c;
        b[v] -= c;
      }
    }
  }

  std::optional<std::size_t> find_divisor(const ExponentVector& m, Mask mask) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (m[v] == 0) continue;
      auto& bucket = buckets_[v];
      for (std::size_t k = 0; k < bucket.size();) {
        const Element& e = elements_[bucket[k]];
        if (!e.active) {  // drop lazily
          bucket[k] = bucket.back();
          bucket.pop_back();
          continue;
        }
        if (divides_masked(e.lead, e.mask, m, mask)) return bucket[k];
        ++k;
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<ExponentVector, ExponentVector>> top_reduce(ExponentVector lead, ExponentVector tail) {
    cancel(lead, tail);
    while (true) {
      auto d = find_divisor(lead, support_mask(lead));
      if (!d) return std::make_pair(std::move(lead), std::move(tail));
      const Element& g = elements_[*d];
      for (std::size_t v = 0; v < n_; ++v) lead[v] = checked_add(lead[v] - g.lead[v], g.tail[v]);
      cancel(lead, tail);
      auto c = order_.compare(lead, tail);
      if (c == 0) return std::nullopt;
      if (c < 0) std::swap(lead, tail);
    }
  }

  bool is_coprime(const Element& a, const Element& b) const {
    if ((a.mask & b.mask) == 0) return true;
    if (exact_masks_) return false;
    return coprime(a.lead, b.lead);
  }

  void insert(ExponentVector lead, ExponentVector tail) {
    if (options_.degree_cap > 0 && total_degree(lead) > options_.degree_cap)
      throw DegreeCapExceeded("Groebner basis element of degree " + std::to_string(total_degree(lead)) +
                              " exceeds the degree cap " + std::to_string(options_.degree_cap));
    const std::size_t h = elements_.size();
    Element e{std::move(lead), std::move(tail), 0, true};
    e.mask = support_mask(e.lead);

    // Gebauer-Moeller, new pairs (g, h). lcm(g', h) | lcm(g, h) holds exactly
    // when lead(g') | lcm(g, h). Pairs with coprime leads are never queued
    // but may still eliminate others.
    const std::size_t m = active_.size();
    std::vector<char> coprime_flag(m), kept(m, 1);
    for (std::size_t a = 0; a < m; ++a) coprime_flag[a] = is_coprime(elements_[active_[a]], e);
    std::vector<std::pair<std::size_t, ExponentVector>> fresh;
    for (std::size_t a = 0; a < m; ++a) {
      if (coprime_flag[a]) continue;
      const Element& ga = elements_[active_[a]];
      ExponentVector l = lcm(ga.lead, e.lead);
      Mask lm = ga.mask | e.mask;
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a || (b < a && !kept[b])) continue;
        const Element& gb = elements_[active_[b]];
        if (divides_masked(gb.lead, gb.mask, l, lm)) {
          kept[a] = 0;
          break;
        }
      }
      if (kept[a]) fresh.emplace_back(active_[a], std::move(l));
    }

    // Old pairs made redundant by the new lead.
    for (auto& p : pool_) {
      if (!p.alive || !divides_masked(e.lead, e.mask, p.lcm, p.mask)) continue;
      const Element& gi = elements_[p.i];
      const Element& gj = elements_[p.j];
      bool same_i = true, same_j = true;
      for (std::size_t v = 0; v < n_ && (same_i || same_j); ++v) {
        if (std::max(gi.lead[v], e.lead[v]) != p.lcm[v]) same_i = false;
        if (std::max(gj.lead[v], e.lead[v]) != p.lcm[v]) same_j = false;
      }
      if (!same_i && !same_j) {
        p.alive = false;
        p.lcm = {};
        --live_pairs_;
      }
    }

    for (auto& [g, l] : fresh) {
      Exponent deg = total_degree(l);
      Mask mask = elements_[g].mask | e.mask;
      queue_.push(QueueEntry{deg, g, h, pool_.size()});
      pool_.push_back(Pair{deg, g, h, std::move(l), mask, true});
      ++live_pairs_;
    }

    std::size_t keep = 0;
    for (std::size_t a = 0; a < m; ++a) {
      Element& eg = elements_[active_[a]];
      if (divides_masked(e.lead, e.mask, eg.lead, eg.mask))
        eg.active = false;
      else
        active_[keep++] = active_[a];
    }
    active_.resize(keep);

    std::size_t first = 0;
    while (first < n_ && e.lead[first] == 0) ++first;
    elements_.push_back(std::move(e));
    active_.push_back(h);
    if (first < n_) buckets_[first].push_back(h);
  }

  void compact() {
    std::vector<Pair> pool;
    std::priority_queue<QueueEntry> queue;
    for (auto& p : pool_) {
      if (!p.alive) continue;
      queue.push(QueueEntry{p.degree, p.i, p.j, pool.size()});
      pool.push_back(std::move(p));
    }
    pool_ = std::move(pool);
    queue_ = std::move(queue);
  }

  const MonomialOrder& order_;
  const BuchbergerOptions& options_;
  std::size_t n_;
  bool exact_masks_;
  std::vector<bool> saturated_;
  std::vector<Element> elements_;
  std::vector<std::size_t> active_;  // indices of active elements, increasing
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<Pair> pool_;
  std::priority_queue<QueueEntry> queue_;
  std::size_t live_pairs_ = 0;
};

}  // namespace

std::vector<MarkedBinomial> binomial_groebner(const std::vector<MarkedBinomial>& generators,
                                              const MonomialOrder& order, const BuchbergerOptions& options,
                                              BuchbergerStats* stats) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().variables();
  if (order.size() != n) throw std::invalid_argument("order size does not match binomial length");
  Engine engine(order, options, n);
  for (const auto& g : generators) {
    if (g.variables() != n) throw std::invalid_argument("generators have different lengths");
    engine.add_generator(g);
  }
  engine.run(stats);
  return engine.reduced_basis();
}

}  // namespace nestconf
